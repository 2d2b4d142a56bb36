#include <cmath>
#include <limits>
#include <string>

#include "zetareg/specfun.hpp"

namespace zetareg {
namespace {

constexpr std::size_t kMaxFactors = 100'000'000;

void check_q(Complex q, const char* where) {
  if (!is_finite(q)) throw DomainError(std::string(where) + ": non-finite q");
  if (std::abs(q) >= 1.0) {
    throw DivergenceError(std::string(where) + ": infinite product needs |q| < 1");
  }
}

}  // namespace

QDeformParams QDeformParams::from_thermal(double beta, double hbar,
                                          std::span<const double> lambdas) {
  if (!(beta > 0.0) || !(hbar > 0.0)) {
    throw DomainError("QDeformParams: beta and hbar must be positive");
  }
  QDeformParams params{Complex(std::exp(-beta * hbar), 0.0), {}};
  params.t.reserve(lambdas.size());
  for (double lambda : lambdas) {
    if (!(lambda > 0.0)) throw DomainError("QDeformParams: lambda_j must be positive");
    params.t.emplace_back(std::exp(-beta * lambda), 0.0);
  }
  return params;
}

Complex q_pochhammer(Complex t, Complex q, std::size_t n) {
  Complex product{1.0, 0.0};
  Complex tq = t;
  for (std::size_t k = 0; k < n; ++k) {
    product *= 1.0 - tq;
    tq *= q;
  }
  return checked(product, "q_pochhammer");
}

double q_pochhammer_tail_bound(Complex t, Complex q, std::size_t factors) {
  const double abs_q = std::abs(q);
  const double lead = std::abs(t) * std::pow(abs_q, static_cast<double>(factors));
  if (lead == 0.0) return 0.0;
  if (lead >= 1.0) return std::numeric_limits<double>::infinity();
  // sum_{k >= K} |t q^k| / (1 - |t q^k|) <= lead / ((1 - |q|)(1 - lead)).
  return lead / ((1.0 - abs_q) * (1.0 - lead));
}

std::size_t q_pochhammer_cutoff(Complex t, Complex q, double tol) {
  check_q(q, "q_pochhammer_cutoff");
  if (!(tol > 0.0)) throw DomainError("q_pochhammer_cutoff: tol must be positive");
  std::size_t factors = 0;
  while (q_pochhammer_tail_bound(t, q, factors) > tol) {
    if (++factors > kMaxFactors) {
      throw DivergenceError("q_pochhammer_cutoff: |q| too close to 1 for tol");
    }
  }
  return factors;
}

Complex q_pochhammer_inf(Complex t, Complex q, double tol) {
  return q_pochhammer(t, q, q_pochhammer_cutoff(t, q, tol));
}

Complex q_gamma(Complex t, Complex q, double tol) {
  check_q(q, "q_gamma");
  if (!is_finite(t)) throw DomainError("q_gamma: non-finite t");
  // |e^{tail} - 1| <= tol once |tail| <= log(1 + tol).
  const std::size_t factors = q_pochhammer_cutoff(t, q, std::log1p(tol));

  Complex product{1.0, 0.0};
  Complex tq = t;
  for (std::size_t k = 0; k < factors; ++k) {
    const Complex factor = 1.0 - tq;
    if (std::abs(factor) <= 4.0 * std::numeric_limits<double>::epsilon()) {
      throw PoleError("q_gamma: t q^" + std::to_string(k) + " = 1");
    }
    product *= factor;
    tq *= q;
  }
  return checked(1.0 / product, "q_gamma");
}

}  // namespace zetareg
