#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "zetareg/grassmann.hpp"
#include "zetareg/random.hpp"
#include "zetareg/regdet.hpp"
#include "zetareg/specfun.hpp"
#include "zetareg/volumes.hpp"

namespace zetareg {
namespace {

constexpr int kMaxBerezinDim = 8;

void check_square(const ComplexMatrix& a, const char* where) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    throw DomainError(std::string(where) + ": needs a non-empty square matrix");
  }
  if (!a.allFinite()) throw DomainError(std::string(where) + ": non-finite entries");
}

void check_positive(std::span<const double> values, const char* where, const char* what) {
  if (values.empty()) throw DomainError(std::string(where) + ": empty " + what + " list");
  for (double v : values) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw DomainError(std::string(where) + ": every " + what + " must be positive");
    }
  }
}

std::vector<Complex> eigenvalues_of(const ComplexMatrix& a) {
  std::vector<Complex> out;
  if (is_hermitian(a)) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a, Eigen::EigenvaluesOnly);
    for (Eigen::Index k = 0; k < a.rows(); ++k) out.emplace_back(solver.eigenvalues()(k), 0.0);
  } else {
    Eigen::ComplexEigenSolver<ComplexMatrix> solver(a, false);
    for (Eigen::Index k = 0; k < a.rows(); ++k) out.push_back(solver.eigenvalues()(k));
  }
  return out;
}

double one_minus_exp_neg(double x) { return -std::expm1(-x); }

class NeumaierSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    compensation_ += std::abs(sum_) >= std::abs(x) ? (sum_ - t) + x : (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

}  // namespace

void TruncationControl::validate() const {
  if (mc_samples == 0 || degree_cutoff == 0 || !(tol > 0.0)) {
    throw DomainError("TruncationControl: mc_samples, degree_cutoff and tol must be positive");
  }
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
  if (a.rows() != a.cols()) return false;
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  return (a - a.adjoint()).cwiseAbs().maxCoeff() <= tol * scale;
}

Complex gaussian_integral(const ComplexMatrix& a) {
  check_square(a, "gaussian_integral");
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  Complex value{1.0, 0.0};
  for (Complex eig : eigenvalues_of(a)) {
    if (std::abs(eig) <= 1e-13 * scale) {
      throw SingularMatrixError("gaussian_integral: zero eigenvalue, det A = 0");
    }
    if (eig.real() < -1e-12 * scale) {
      throw DomainError("gaussian_integral: eigenvalue " + format_complex(eig, 10) +
                        " has negative real part; the integral diverges");
    }
    value *= kTwoPi / eig;
  }
  return checked(value, "gaussian_integral");
}

McEstimate gaussian_integral_mc(const ComplexMatrix& a, const TruncationControl& ctl) {
  ctl.validate();
  check_square(a, "gaussian_integral_mc");
  if (!is_hermitian(a)) throw DomainError("gaussian_integral_mc: A must be Hermitian");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a, Eigen::EigenvaluesOnly);
  const double lambda_min = solver.eigenvalues().minCoeff();
  if (std::abs(lambda_min) <= 1e-13 * std::max(1.0, a.cwiseAbs().maxCoeff())) {
    throw SingularMatrixError("gaussian_integral_mc: zero eigenvalue, det A = 0");
  }
  if (lambda_min < 0.0) {
    throw DomainError("gaussian_integral_mc: A must be positive definite");
  }

  const int n = static_cast<int>(a.rows());
  const double kappa = 0.5 * lambda_min;
  const double log_norm = n * std::log(kPi / kappa);
  std::vector<Complex> entries(a.data(), a.data() + a.size());  // column-major
  std::vector<Complex> z(n);

  auto rng = substream(ctl.seed, 0);
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5 / kappa));

  // Compensated sums of w and (w - w_0)^2; shifting by the first weight
  // keeps the variance free of cancellation.
  NeumaierSum sum;
  NeumaierSum shifted_sq;
  NeumaierSum shifted;
  double first = 0.0;
  for (std::size_t k = 0; k < ctl.mc_samples; ++k) {
    double norm2 = 0.0;
    for (auto& zj : z) {
      zj = Complex(normal(rng), normal(rng));
      norm2 += std::norm(zj);
    }
    double form = 0.0;  // z^dagger A z, real for Hermitian A
    for (int col = 0; col < n; ++col) {
      Complex acc{0.0, 0.0};
      for (int row = 0; row < n; ++row) acc += std::conj(z[row]) * entries[col * n + row];
      form += (acc * z[col]).real();
    }
    const double weight = std::exp(log_norm + kappa * norm2 - 0.5 * form);
    if (k == 0) first = weight;
    sum.add(weight);
    shifted.add(weight - first);
    shifted_sq.add((weight - first) * (weight - first));
  }
  const double samples = static_cast<double>(ctl.mc_samples);
  const double mean = sum.value() / samples;
  const double shifted_mean = shifted.value() / samples;
  const double variance =
      ctl.mc_samples > 1
          ? std::max(0.0, (shifted_sq.value() - samples * shifted_mean * shifted_mean) /
                              (samples - 1.0))
          : 0.0;
  // Each weight carries a relative rounding error of a few ulps times the
  // size of its exponent; the statistical error never drops below that.
  const double rounding =
      8.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(log_norm)) * mean;
  const double standard_error = std::hypot(std::sqrt(variance / samples), rounding);
  return {Complex(mean, 0.0), standard_error, ctl.mc_samples};
}

Complex berezin_det(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionError("berezin_det: matrix must be square");
  const int n = static_cast<int>(a.rows());
  if (n > kMaxBerezinDim) {
    throw DimensionError("berezin_det: N = " + std::to_string(n) + " exceeds " +
                         std::to_string(kMaxBerezinDim));
  }
  if (n == 0) return 1.0;

  GrassmannElement action(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (a(i, j) == Complex(0.0, 0.0)) continue;
      action += (kI * a(i, j)) * (GrassmannElement::eta_bar(n, i) * GrassmannElement::eta(n, j));
    }
  }
  // Measure prod_j (i d eta_j d etabar_j).
  return std::pow(kI, n) * action.exp().berezin();
}

Complex equivariant_volume_superintegral(std::span<const double> lambdas, double mu) {
  check_positive(lambdas, "equivariant_volume_superintegral", "lambda");
  if (!(mu > 0.0)) throw DomainError("equivariant_volume_superintegral: mu must be positive");
  const int n = static_cast<int>(lambdas.size());

  ComplexMatrix form = ComplexMatrix::Zero(n, n);
  for (int j = 0; j < n; ++j) form(j, j) = mu * lambdas[j];
  // gaussian_integral uses dx dy; dz dzbar = -2i dx dy per complex variable.
  const Complex bosonic = std::pow(Complex(0.0, -2.0), n) * gaussian_integral(form);

  GrassmannElement odd(n);
  for (int j = 0; j < n; ++j) {
    odd += (0.5 * kI * mu) * (GrassmannElement::eta(n, j) * GrassmannElement::eta_bar(n, j));
  }
  return bosonic * odd.exp().berezin();
}

double equivariant_volume(std::span<const double> lambdas) {
  check_positive(lambdas, "equivariant_volume", "lambda");
  double value = 1.0;
  for (double lambda : lambdas) value *= kTwoPi / lambda;
  return value;
}

double character_trace(double beta, std::span<const double> lambdas, std::size_t degree) {
  if (!(beta > 0.0)) throw DomainError("character_trace: beta must be positive");
  check_positive(lambdas, "character_trace", "lambda");

  // partial[d]: sum over the remaining variables with total degree <= d.
  std::vector<double> partial(degree + 1, 1.0);
  std::vector<double> next(degree + 1);
  for (auto it = lambdas.rbegin(); it != lambdas.rend(); ++it) {
    const double x = std::exp(-beta * *it);
    for (std::size_t d = 0; d <= degree; ++d) {
      double sum = 0.0;
      double power = 1.0;
      for (std::size_t m = 0; m <= d; ++m) {
        sum += power * partial[d - m];
        power *= x;
      }
      next[d] = sum;
    }
    partial.swap(next);
  }
  return partial[degree];
}

double character_closed_form(double beta, std::span<const double> lambdas) {
  if (!(beta > 0.0)) throw DomainError("character_closed_form: beta must be positive");
  check_positive(lambdas, "character_closed_form", "lambda");
  double value = 1.0;
  for (double lambda : lambdas) value /= one_minus_exp_neg(beta * lambda);
  return value;
}

double character_tail_bound(double beta, std::span<const double> lambdas, std::size_t degree) {
  if (!(beta > 0.0)) throw DomainError("character_tail_bound: beta must be positive");
  check_positive(lambdas, "character_tail_bound", "lambda");
  const double k = static_cast<double>(lambdas.size());
  const double d = static_cast<double>(degree);
  const double lambda_min = *std::min_element(lambdas.begin(), lambdas.end());
  const double log_x = -beta * lambda_min;
  // Tail <= sum_{m > D} C(m+k-1, k-1) x^m; successive ratios are at most
  // x (D+1+k)/(D+2).
  const double ratio = std::exp(log_x) * (d + 1.0 + k) / (d + 2.0);
  if (ratio >= 1.0) return std::numeric_limits<double>::infinity();
  const double log_binom = std::lgamma(d + k + 1.0) - std::lgamma(k) - std::lgamma(d + 2.0);
  return std::exp(log_binom + (d + 1.0) * log_x) / (1.0 - ratio);
}

double character_tail_bound_geometric(double beta, std::span<const double> lambdas,
                                      std::size_t degree) {
  if (!(beta > 0.0)) throw DomainError("character_tail_bound_geometric: beta must be positive");
  check_positive(lambdas, "character_tail_bound_geometric", "lambda");
  const double lambda_min = *std::min_element(lambdas.begin(), lambdas.end());
  const double x = beta * lambda_min;
  return std::exp(-x * (static_cast<double>(degree) + 1.0)) /
         std::pow(one_minus_exp_neg(x), static_cast<double>(lambdas.size()));
}

double classical_limit_ratio(std::span<const double> lambdas, double beta) {
  const double scale = std::pow(kTwoPi * beta, static_cast<double>(lambdas.size()));
  return scale * character_closed_form(beta, lambdas) / equivariant_volume(lambdas);
}

std::vector<VerificationReport> classical_limit_check(std::span<const double> lambdas,
                                                      std::span<const double> betas) {
  check_positive(lambdas, "classical_limit_check", "lambda");
  check_positive(betas, "classical_limit_check", "beta");
  for (std::size_t k = 1; k < betas.size(); ++k) {
    if (!(betas[k] < betas[k - 1])) {
      throw DomainError("classical_limit_check: betas must be strictly decreasing");
    }
  }
  double slope = 0.0;
  for (double lambda : lambdas) slope += lambda;

  std::string lambda_text;
  for (double lambda : lambdas) lambda_text += format_double(lambda) + ";";

  std::vector<VerificationReport> reports;
  for (double beta : betas) {
    reports.push_back(make_report("classical_limit_ratio",
                                  "lambdas=" + lambda_text + " beta=" + format_double(beta),
                                  classical_limit_ratio(lambdas, beta), 1.0, slope * beta,
                                  Tolerance::kAbsolute));
  }
  return reports;
}

std::size_t mode_partition_cutoff(double beta, double hbar, double lambda, double tol) {
  const auto params = QDeformParams::from_thermal(beta, hbar, std::span(&lambda, 1));
  const std::size_t factors = q_pochhammer_cutoff(params.t[0], params.q, std::log1p(tol));
  return std::max<std::size_t>(factors, 1) - 1;
}

Complex mode_partition_3d(double beta, double hbar, double lambda,
                          std::optional<std::size_t> cutoff, double tol) {
  if (!(beta > 0.0) || !(hbar > 0.0) || !(lambda > 0.0)) {
    throw DomainError("mode_partition_3d: beta, hbar and lambda must be positive");
  }
  const std::size_t last = cutoff ? *cutoff : mode_partition_cutoff(beta, hbar, lambda, tol);
  double value = 1.0;
  for (std::size_t n = 0; n <= last; ++n) {
    value /= one_minus_exp_neg(beta * (hbar * static_cast<double>(n) + lambda));
  }
  return value;
}

ModeFactorCheck mode_factor_check(double beta, double hbar, double lambda, std::size_t n) {
  if (!(beta > 0.0) || !(hbar > 0.0) || !(lambda > 0.0)) {
    throw DomainError("mode_factor_check: beta, hbar and lambda must be positive");
  }
  const double energy = beta * (hbar * static_cast<double>(n) + lambda);
  // d/dtau - energy/(2 pi) on periodic functions: eigenvalues i k - energy/(2 pi).
  const Complex rho = kI;
  const Complex shift(-energy / kTwoPi, 0.0);
  ModeFactorCheck check;
  check.n = n;
  check.direct = 1.0 / one_minus_exp_neg(energy);
  check.via_regdet = 1.0 / regdet(SpectrumDescriptor::full_line(rho, shift)).det;
  check.via_zeta = 1.0 / regdet_fullline_numeric(rho, shift);
  return check;
}

}  // namespace zetareg
