#ifndef ZETAREG_VOLUMES_HPP_
#define ZETAREG_VOLUMES_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "zetareg/complex.hpp"
#include "zetareg/report.hpp"

namespace zetareg {

using ComplexMatrix = Eigen::MatrixXcd;

// Controls for the truncated and sampled evaluations.
struct TruncationControl {
  std::size_t mode_cutoff = 0;  // 0: derive from tol
  std::size_t degree_cutoff = 40;
  std::size_t mc_samples = 1'000'000;
  std::uint64_t seed = 0;
  double tol = 1e-10;

  // Throws DomainError unless mc_samples > 0, degree_cutoff > 0, tol > 0.
  void validate() const;
};

// True when |A - A^dagger| <= 1e-12 entrywise (scaled by max(1, |A|)).
bool is_hermitian(const ComplexMatrix& a, double tol = 1e-12);

// (i/2)^N int exp(-1/2 zbar A z) prod dz dzbar = 1 / det(A / 2 pi).
//
// Accepts any square A whose eigenvalues have non-negative real part
// (positive definite Hermitian forms, and their Re >= 0 limits).
// Throws SingularMatrixError on a zero eigenvalue, DomainError on an
// eigenvalue with negative real part or a non-square input.
Complex gaussian_integral(const ComplexMatrix& a);

struct McEstimate {
  Complex estimate;
  double standard_error = 0.0;
  std::size_t samples = 0;
};

// Importance-sampled estimate of the same integral for Hermitian
// positive definite A.  Draws z from the isotropic complex Gaussian with
// precision kappa = lambda_min(A)/2 and averages the weight
// pi^N kappa^{-N} exp(kappa |z|^2 - z^dagger A z / 2).  The standard
// error is floored at the rounding level of a single weight, so a
// zero-variance estimator (N = 1) still reports a usable error bar.
// Reproducible for a fixed ctl.seed.
McEstimate gaussian_integral_mc(const ComplexMatrix& a, const TruncationControl& ctl);

// det A through the Grassmann expansion of exp(i sum etabar_i A_ij eta_j)
// with measure prod_j (i d eta_j d etabar_j).  N <= 8; throws
// DimensionError otherwise.
Complex berezin_det(const ComplexMatrix& a);

// Super-integral form of the equivariant volume:
//   int prod dz dzbar d eta d etabar exp((i mu/2) sum (eta_j etabar_j + i lambda_j |z_j|^2)),
// with dz dzbar = -2i dx dy.  Bosonic part from gaussian_integral, odd
// part from the Grassmann engine.  Independent of mu.
Complex equivariant_volume_superintegral(std::span<const double> lambdas, double mu);

// (2 pi)^{l+1} / prod lambda_j.  Throws DomainError unless all > 0.
double equivariant_volume(std::span<const double> lambdas);

// Trace of exp(-beta sum lambda_j H_j) over monomials of total degree <= D.
double character_trace(double beta, std::span<const double> lambdas, std::size_t degree);

// prod_j 1 / (1 - exp(-beta lambda_j)).
double character_closed_form(double beta, std::span<const double> lambdas);

// Upper bound on closed form minus the degree-D truncation, valid for
// any weights (repeated ones included).
double character_tail_bound(double beta, std::span<const double> lambdas, std::size_t degree);

// exp(-beta lmin (D+1)) / (1 - exp(-beta lmin))^{l+1}.  A bound for
// a single weight; with several distinct weights it bounds the tail
// only when the smallest weight dominates.
double character_tail_bound_geometric(double beta, std::span<const double> lambdas,
                                      std::size_t degree);

// r(beta) = (2 pi beta)^{l+1} Z_hbar(beta, lambda) / equivariant_volume(lambda).
double classical_limit_ratio(std::span<const double> lambdas, double beta);

// One report per beta; pass iff |r(beta) - 1| <= (sum lambda_j) beta.
std::vector<VerificationReport> classical_limit_check(std::span<const double> lambdas,
                                                      std::span<const double> betas);

// prod_{n=0}^{N} 1 / (1 - exp(-beta (hbar n + lambda))).  With no N the
// cutoff is taken from the q-Pochhammer tail bound so the value is
// within relative tol of Gamma_q(exp(-beta lambda)), q = exp(-beta hbar).
Complex mode_partition_3d(double beta, double hbar, double lambda,
                          std::optional<std::size_t> cutoff, double tol = 1e-12);

// Largest mode index N used by mode_partition_3d for a given tol.
std::size_t mode_partition_cutoff(double beta, double hbar, double lambda, double tol);

// The n-th factor Z_n three ways: directly, as 1 / regdet of the loop
// operator d/dtau - beta(hbar n + lambda)/(2 pi) (full-line spectrum
// i k - beta(hbar n + lambda)/(2 pi), closed form), and through the
// Hurwitz assembly of the same determinant.
struct ModeFactorCheck {
  std::size_t n = 0;
  Complex direct;
  Complex via_regdet;
  Complex via_zeta;
};
ModeFactorCheck mode_factor_check(double beta, double hbar, double lambda, std::size_t n);

}  // namespace zetareg

#endif  // ZETAREG_VOLUMES_HPP_
