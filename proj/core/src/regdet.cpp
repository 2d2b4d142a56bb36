#include <cmath>
#include <string>

#include "zetareg/random.hpp"
#include "zetareg/regdet.hpp"
#include "zetareg/specfun.hpp"

namespace zetareg {
namespace {

std::string describe(const SpectrumDescriptor& spec) {
  return to_string(spec.kind) + "(rho=" + format_complex(spec.rho, 10) +
         ", lambda=" + format_complex(spec.lambda, 10) + ")";
}

bool is_integer_point(Complex a) {
  return a.imag() == 0.0 && a.real() == std::round(a.real());
}

}  // namespace

std::string to_string(SpectrumKind kind) {
  switch (kind) {
    case SpectrumKind::kHalfLine: return "HalfLine";
    case SpectrumKind::kFullLine: return "FullLine";
    case SpectrumKind::kConstant: return "Constant";
  }
  return "Unknown";
}

void validate(const SpectrumDescriptor& spec) {
  if (!is_finite(spec.rho) || !is_finite(spec.lambda)) {
    throw SpectrumError("non-finite spectrum parameters: " + describe(spec));
  }
  if (spec.rho == Complex(0.0, 0.0)) {
    throw SpectrumError("rho = 0 gives a zero mode: " + describe(spec));
  }
  const Complex a = spec.lambda / spec.rho;
  switch (spec.kind) {
    case SpectrumKind::kHalfLine:
      if (near_gamma_pole(a)) {
        throw SpectrumError("lambda/rho is a non-positive integer (zero mode): " +
                            describe(spec));
      }
      break;
    case SpectrumKind::kFullLine:
      if (!(spec.rho.imag() > 0.0)) {
        throw SpectrumError("full-line spectrum needs Im rho > 0: " + describe(spec));
      }
      if (is_integer_point(a)) {
        throw SpectrumError("lambda/rho is an integer (zero mode): " + describe(spec));
      }
      break;
    case SpectrumKind::kConstant:
      break;
  }
}

RegDetResult regdet(const SpectrumDescriptor& spec) {
  validate(spec);
  RegDetResult result;
  switch (spec.kind) {
    case SpectrumKind::kHalfLine: {
      const Complex a = spec.lambda / spec.rho;
      result.log_det =
          (0.5 - a) * principal_log(spec.rho) + 0.5 * kLogTwoPi - log_gamma(a);
      result.det = std::exp(result.log_det);
      result.branch_note = "principal log rho; log Gamma(lambda/rho) mod 2 pi i";
      break;
    }
    case SpectrumKind::kConstant:
      result.log_det = 0.5 * principal_log(spec.rho);
      result.det = std::exp(result.log_det);
      result.branch_note = "principal square root of rho";
      break;
    case SpectrumKind::kFullLine: {
      const Complex a = spec.lambda / spec.rho;
      result.det = 1.0 - std::exp(2.0 * kPi * kI * a);
      result.log_det = principal_log(result.det);
      result.branch_note = "reflected half-spectrum measured counter-clockwise from arg rho";
      break;
    }
  }
  checked(result.det, "regdet");
  return result;
}

Complex regdet_halfline_log_numeric(Complex rho, Complex lambda) {
  validate(SpectrumDescriptor::half_line(rho, lambda));
  const Complex a = lambda / rho;
  try {
    // log det = -d/ds [rho^{-s} zeta(s, a)]_{s=0} = zeta(0, a) log rho - zeta'(0, a).
    return hurwitz_zeta(0.0, a) * principal_log(rho) - hurwitz_zeta_ds0(a);
  } catch (const DomainError& e) {
    throw SpectrumError(std::string("half-line Hurwitz assembly: ") + e.what());
  }
}

Complex regdet_fullline_numeric(Complex rho, Complex lambda, ReflectedBranch branch) {
  validate(SpectrumDescriptor::full_line(rho, lambda));
  Complex a = lambda / rho;
  a -= std::floor(a.real());
  const Complex b = 1.0 - a;

  const Complex log_rho = principal_log(rho);
  const Complex log_minus_rho = branch == ReflectedBranch::kCounterClockwise
                                    ? log_rho + kI * kPi
                                    : principal_log(-rho);

  // sum_{n in Z} (rho n + lambda)^{-s} = rho^{-s} zeta(s, a) + (-rho)^{-s} zeta(s, 1 - a)
  const Complex forward = -hurwitz_zeta(0.0, a) * log_rho + hurwitz_zeta_ds0(a);
  const Complex reflected = -hurwitz_zeta(0.0, b) * log_minus_rho + hurwitz_zeta_ds0(b);
  return checked(std::exp(-(forward + reflected)), "regdet_fullline_numeric");
}

Complex disk_det_ratio(double mu, double hbar, double lambda) {
  if (!(mu > 0.0) || !(hbar > 0.0) || !std::isfinite(lambda)) {
    throw DomainError("disk_det_ratio: needs mu > 0, hbar > 0, finite lambda");
  }
  if (near_gamma_pole(Complex(lambda / hbar, 0.0))) {
    throw PoleError("disk_det_ratio: lambda/hbar is a non-positive integer");
  }
  // D has spectrum (mu/2)(hbar n + lambda); D_0 multiplies by 2 pi mu / 2.
  const Complex log_det_d =
      regdet(SpectrumDescriptor::half_line(0.5 * mu * hbar, 0.5 * mu * lambda)).log_det;
  const Complex log_det_d0 = regdet(SpectrumDescriptor::constant(kPi * mu)).log_det;
  return checked(std::exp(log_det_d0 - log_det_d), "disk_det_ratio");
}

Complex disk_det_ratio_closed_form(double mu, double hbar, double lambda) {
  if (!(mu > 0.0) || !(hbar > 0.0) || !std::isfinite(lambda)) {
    throw DomainError("disk_det_ratio_closed_form: needs mu > 0, hbar > 0, finite lambda");
  }
  const double a = lambda / hbar;
  const Complex log_value =
      -0.5 * std::log(hbar) - a * std::log(2.0 / (mu * hbar)) + log_gamma(a);
  return checked(std::exp(log_value), "disk_det_ratio_closed_form");
}

std::vector<VerificationReport> regdet_consistency_report(std::size_t samples,
                                                          std::uint64_t seed, double tol) {
  std::vector<VerificationReport> reports;
  reports.reserve(2 * samples);
  for (std::size_t i = 0; i < samples; ++i) {
    auto rng = substream(seed, i);
    const Complex rho = std::polar(uniform(rng, 0.5, 3.0), uniform(rng, 0.15, kPi - 0.15));
    const Complex a(uniform(rng, 0.05, 0.95), uniform(rng, -0.8, 0.8));
    const Complex lambda = rho * a;
    const double mu = uniform(rng, 0.2, 4.0);
    const double hbar = uniform(rng, 0.25, 3.0);
    const double disk_lambda = uniform(rng, 0.1, 6.0);

    const std::string full_params =
        "rho=" + format_complex(rho) + " lambda=" + format_complex(lambda);
    try {
      reports.push_back(make_report("fullline_numeric_vs_closed_form", full_params,
                                    regdet_fullline_numeric(rho, lambda),
                                    regdet(SpectrumDescriptor::full_line(rho, lambda)).det,
                                    tol));
    } catch (const Error& e) {
      reports.push_back(make_failure("fullline_numeric_vs_closed_form", full_params,
                                     e.what(), tol));
    }

    const std::string disk_params = "mu=" + format_double(mu) +
                                    " hbar=" + format_double(hbar) +
                                    " lambda=" + format_double(disk_lambda);
    try {
      reports.push_back(make_report("disk_det_ratio_vs_integral_representation", disk_params,
                                    disk_det_ratio(mu, hbar, disk_lambda),
                                    disk_det_ratio_closed_form(mu, hbar, disk_lambda), tol));
    } catch (const Error& e) {
      reports.push_back(make_failure("disk_det_ratio_vs_integral_representation",
                                     disk_params, e.what(), tol));
    }
  }
  return reports;
}

}  // namespace zetareg
