#ifndef ZETAREG_SPECFUN_HPP_
#define ZETAREG_SPECFUN_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "zetareg/complex.hpp"

namespace zetareg {

//======================================================================
// Hurwitz zeta function
//
//   zeta(s, a) = sum_{n >= 0} (n + a)^{-s}
//
// continued to s != 1 with the Euler-Maclaurin formula: the first M
// terms are summed directly and the tail is replaced by its integral
// plus ten Bernoulli corrections (B_2 .. B_20), with
// M = max(ceil|a|, ceil|s|, 15).  Powers use the principal branch.
//
// Accepted a: Re a > 0, or Re a == 0 with Im a != 0 (no term n + a then
// reaches the branch cut).  Relative accuracy ~1e-12 for |s| <= 30.
//
// Throws PoleAtOneError for s == 1, DomainError for other a.
Complex hurwitz_zeta(Complex s, Complex a);

// d/ds zeta(s, a) at s = 0, by differentiating the Euler-Maclaurin
// expansion term by term.  Equals log Gamma(a) - log(2 pi) / 2.
Complex hurwitz_zeta_ds0(Complex a);

//======================================================================
// Gamma function.
//
// log_gamma is the analytic log-Gamma on Re z > 0 (real on the positive
// axis), computed from the Stirling series after shifting Re z >= 10.
// For Re z < 1/2 it is continued through Gamma(z) Gamma(1-z) = pi/sin(pi z);
// there the imaginary part is only meaningful modulo 2 pi.
//
// Throws PoleError on z = 0, -1, -2, ...
Complex log_gamma(Complex z);
Complex gamma(Complex z);

// log sin(pi z), modulo 2 pi i, without overflow for large |Im z|.
Complex log_sin_pi(Complex z);

//======================================================================
// q-deformation.
//
// Gamma_q(t) = prod_{k >= 0} 1 / (1 - t q^k), |q| < 1.

struct QDeformParams {
  Complex q;
  std::vector<Complex> t;

  // q = exp(-beta hbar), t_j = exp(-beta lambda_j).  Requires beta,
  // hbar, lambda_j > 0; throws DomainError otherwise.
  static QDeformParams from_thermal(double beta, double hbar,
                                    std::span<const double> lambdas);
};

// prod_{k=0}^{n-1} (1 - t q^k).
Complex q_pochhammer(Complex t, Complex q, std::size_t n);

// Number of factors K such that the neglected tail satisfies
// |sum_{k >= K} log(1 - t q^k)| <= tol, using |log(1-x)| <= |x|/(1-|x|).
// Throws DivergenceError if |q| >= 1, DomainError if tol <= 0.
std::size_t q_pochhammer_cutoff(Complex t, Complex q, double tol);

// Rigorous bound on the neglected log-tail after K factors.
double q_pochhammer_tail_bound(Complex t, Complex q, std::size_t factors);

// prod_{k >= 0} (1 - t q^k), truncated by q_pochhammer_cutoff(t, q, tol).
Complex q_pochhammer_inf(Complex t, Complex q, double tol);

// Gamma_q(t), relative error <= tol.  Throws PoleError when some
// t q^k == 1, DivergenceError when |q| >= 1.
Complex q_gamma(Complex t, Complex q, double tol);

}  // namespace zetareg

#endif  // ZETAREG_SPECFUN_HPP_
