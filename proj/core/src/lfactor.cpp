#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "zetareg/lfactor.hpp"
#include <limits>

namespace zetareg {
namespace {

constexpr double kLogPi = 1.1447298858494001741434273513531;

std::string place_name(const LFactorSpec& spec) {
  switch (spec.place) {
    case Place::kReal: return spec.frobenius > 0 ? "real(Fr=+1)" : "real(Fr=-1)";
    case Place::kComplex: return "complex";
    case Place::kNonArchimedean: return "p=" + std::to_string(spec.prime);
  }
  return "unknown";
}

Complex gamma_factor(Complex z, const LFactorSpec& spec, Complex alpha) {
  if (near_gamma_pole(z)) {
    throw PoleError("l_factor at " + place_name(spec) + ": Gamma pole for eigenvalue " +
                    format_complex(alpha, 10));
  }
  return log_gamma(z);
}

}  // namespace

LFactorSpec LFactorSpec::real(int frobenius, Complex s, std::vector<Complex> eigenvalues) {
  return {Place::kReal, frobenius, 0, s, std::move(eigenvalues)};
}

LFactorSpec LFactorSpec::complex_place(Complex s, std::vector<Complex> eigenvalues) {
  return {Place::kComplex, +1, 0, s, std::move(eigenvalues)};
}

LFactorSpec LFactorSpec::non_archimedean(std::uint64_t p, Complex s,
                                         std::vector<Complex> eigenvalues) {
  return {Place::kNonArchimedean, +1, p, s, std::move(eigenvalues)};
}

EpsilonNormalization EpsilonNormalization::inverse() const {
  if (a == Complex(0.0, 0.0) || !(b > 0.0)) {
    throw DomainError("EpsilonNormalization: needs A != 0 and B > 0");
  }
  return {1.0 / a, 1.0 / b};
}

EpsilonNormalization EpsilonNormalization::then(const EpsilonNormalization& other) const {
  return {a * other.a, b * other.b};
}

Complex EpsilonNormalization::factor(Complex s) const {
  if (a == Complex(0.0, 0.0) || !(b > 0.0)) {
    throw DomainError("EpsilonNormalization: needs A != 0 and B > 0");
  }
  return a * std::exp(s * std::log(b));
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

void validate(const LFactorSpec& spec) {
  if (spec.eigenvalues.empty()) throw DomainError("l_factor: empty eigenvalue list");
  if (!is_finite(spec.s)) throw DomainError("l_factor: non-finite s");
  for (Complex alpha : spec.eigenvalues) {
    if (!is_finite(alpha)) throw DomainError("l_factor: non-finite eigenvalue");
  }
  if (spec.place == Place::kReal && spec.frobenius != 1 && spec.frobenius != -1) {
    throw DomainError("l_factor: Frobenius sign must be +1 or -1");
  }
  if (spec.place == Place::kNonArchimedean && !is_prime(spec.prime)) {
    throw DomainError("l_factor: p = " + std::to_string(spec.prime) + " is not prime");
  }
}

std::vector<Complex> l_factor_breakdown(const LFactorSpec& spec) {
  validate(spec);
  std::vector<Complex> factors;
  factors.reserve(spec.dim());
  const Complex s = spec.s;
  for (Complex alpha : spec.eigenvalues) {
    switch (spec.place) {
      case Place::kReal: {
        const Complex half = 0.5 * (s - alpha);
        const Complex arg = spec.frobenius > 0 ? half : half + 0.5;
        factors.push_back(std::exp(-half * kLogPi + gamma_factor(arg, spec, alpha)));
        break;
      }
      case Place::kComplex: {
        const Complex shifted = s - alpha;
        factors.push_back(
            std::exp(-shifted * std::log(kTwoPi) + gamma_factor(shifted, spec, alpha)));
        break;
      }
      case Place::kNonArchimedean: {
        const Complex euler =
            1.0 - alpha * std::exp(-s * std::log(static_cast<double>(spec.prime)));
        if (std::abs(euler) <= 4.0 * std::numeric_limits<double>::epsilon()) {
          throw ZeroDivisorError("l_factor: Euler factor 1 - a p^{-s} vanishes for a = " +
                                 format_complex(alpha, 10));
        }
        factors.push_back(1.0 / euler);
        break;
      }
    }
    checked(factors.back(), "l_factor");
  }
  return factors;
}

Complex l_factor(const LFactorSpec& spec, const EpsilonNormalization& norm) {
  const auto factors = l_factor_breakdown(spec);
  const Complex product =
      std::accumulate(factors.begin(), factors.end(), Complex(1.0, 0.0), std::multiplies<>());
  return checked(product * norm.factor(spec.s), "l_factor");
}

Complex disk_correlator(double mu, double hbar, std::span<const Complex> lambdas) {
  if (!(mu > 0.0) || !(hbar > 0.0)) {
    throw DomainError("disk_correlator: needs mu > 0 and hbar > 0");
  }
  if (lambdas.empty()) throw DomainError("disk_correlator: empty eigenvalue list");
  const double log_scale = std::log(2.0 / (mu * hbar));
  Complex log_value = -0.5 * static_cast<double>(lambdas.size()) * std::log(hbar);
  Complex product{1.0, 0.0};
  for (Complex lambda : lambdas) {
    const Complex a = lambda / hbar;
    if (!is_finite(a)) throw DomainError("disk_correlator: non-finite eigenvalue");
    if (near_gamma_pole(a)) {
      throw PoleError("disk_correlator: lambda/hbar = " + format_complex(a, 10) +
                      " is a Gamma pole");
    }
    // Multiply factor values rather than summing logs: log_gamma is only
    // defined modulo 2 pi i off the right half-plane.
    product *= std::exp(-a * log_scale + log_gamma(a));
  }
  return checked(std::exp(log_value) * product, "disk_correlator");
}

VerificationReport theorem21_specialization(Complex s, std::span<const Complex> alphas,
                                            double tol) {
  std::vector<Complex> lambdas;
  lambdas.reserve(alphas.size());
  std::string params = "s=" + format_complex(s) + " alphas=";
  for (Complex alpha : alphas) {
    lambdas.push_back(0.5 * (s - alpha));
    params += format_complex(alpha) + ";";
  }
  const Complex correlator = disk_correlator(2.0 / kPi, 1.0, lambdas);
  const Complex lfac = l_factor(LFactorSpec::real(+1, s, {alphas.begin(), alphas.end()}));
  return make_report("disk_correlator_equals_real_l_factor", params, correlator, lfac, tol,
                     Tolerance::kRelative);
}

Complex q_l_factor(const QDeformParams& params, double tol) {
  if (params.t.empty()) throw DomainError("q_l_factor: empty t list");
  // Each factor within tol / dim keeps the product within ~tol.
  const double per_factor = tol / static_cast<double>(params.t.size());
  Complex product{1.0, 0.0};
  for (Complex t : params.t) product *= q_gamma(t, params.q, per_factor);
  return checked(product, "q_l_factor");
}

}  // namespace zetareg
