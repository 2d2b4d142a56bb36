#ifndef ZETAREG_LFACTOR_HPP_
#define ZETAREG_LFACTOR_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "zetareg/complex.hpp"
#include "zetareg/report.hpp"
#include "zetareg/specfun.hpp"

namespace zetareg {

enum class Place { kReal, kComplex, kNonArchimedean };

// A local L-factor request.  The representation enters only through the
// eigenvalues of the relevant group element acting on V; matrices are
// diagonalized by the caller.
struct LFactorSpec {
  Place place = Place::kReal;
  int frobenius = +1;      // real place only: action of Fr_inf, +1 or -1
  std::uint64_t prime = 0;  // non-Archimedean place only
  Complex s;
  std::vector<Complex> eigenvalues;

  std::size_t dim() const { return eigenvalues.size(); }

  static LFactorSpec real(int frobenius, Complex s, std::vector<Complex> eigenvalues);
  static LFactorSpec complex_place(Complex s, std::vector<Complex> eigenvalues);
  static LFactorSpec non_archimedean(std::uint64_t p, Complex s,
                                     std::vector<Complex> eigenvalues);
};

// Multiplies an L-factor by A * B^s.  The default is the identity.
struct EpsilonNormalization {
  Complex a{1.0, 0.0};
  double b = 1.0;

  EpsilonNormalization inverse() const;
  EpsilonNormalization then(const EpsilonNormalization& other) const;
  Complex factor(Complex s) const;
};

bool is_prime(std::uint64_t n);

// Throws DomainError on an empty eigenvalue list, a Frobenius sign other
// than +-1, a non-prime p, or a non-finite input.
void validate(const LFactorSpec& spec);

// One factor per eigenvalue:
//   real, Fr=+1   pi^{-(s-a)/2} Gamma((s-a)/2)
//   real, Fr=-1   pi^{-(s-a)/2} Gamma((s+1-a)/2)
//   complex       (2 pi)^{-(s-a)} Gamma(s-a)
//   p-adic        (1 - a p^{-s})^{-1}
// Throws PoleError on a Gamma pole and ZeroDivisorError when an Euler
// factor vanishes.
std::vector<Complex> l_factor_breakdown(const LFactorSpec& spec);

// Product of the breakdown, times norm.factor(s).
Complex l_factor(const LFactorSpec& spec, const EpsilonNormalization& norm = {});

// hbar^{-(l+1)/2} prod_j (2/(mu hbar))^{-lambda_j/hbar} Gamma(lambda_j/hbar).
Complex disk_correlator(double mu, double hbar, std::span<const Complex> lambdas);

// Compares disk_correlator(2/pi, 1, {(s - a_j)/2}) with the real-place
// L-factor at Fr = +1.  Relative tolerance.
VerificationReport theorem21_specialization(Complex s, std::span<const Complex> alphas,
                                            double tol = 1e-12);

// prod_j Gamma_q(t_j), total relative error <= tol.
Complex q_l_factor(const QDeformParams& params, double tol);

}  // namespace zetareg

#endif  // ZETAREG_LFACTOR_HPP_
