#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <string>

#include <Eigen/LU>

#include "zetareg/lfactor.hpp"
#include "zetareg/random.hpp"
#include "zetareg/regdet.hpp"
#include "zetareg/specfun.hpp"
#include "zetareg/verify.hpp"
#include "zetareg/volumes.hpp"

namespace zetareg {
namespace {

// Stream offsets keep the suites' samples independent of each other.
constexpr std::uint64_t kSpecfunStream = 0x1000'0000;
constexpr std::uint64_t kHalfLineStream = 0x2000'0000;
constexpr std::uint64_t kTheoremStream = 0x3000'0000;
constexpr std::uint64_t kQGammaStream = 0x4000'0000;
constexpr std::uint64_t kVolumesStream = 0x5000'0000;

template <typename Fn>
void guarded(SuiteResult& suite, const std::string& identity, const std::string& params,
             double tol, Fn&& fn) {
  try {
    suite.add(fn());
  } catch (const Error& e) {
    suite.add(make_failure(identity, params, e.what(), tol));
  }
}

void specfun_suite(SuiteResult& suite, std::size_t samples, std::uint64_t seed, double tol) {
  for (std::size_t i = 0; i < samples; ++i) {
    auto rng = substream(seed, kSpecfunStream + i);
    const double a = uniform(rng, 0.1, 10.0);
    const double b = uniform(rng, 0.1, 20.0);
    const Complex z(uniform(rng, -4.0, 4.0), uniform(rng, -3.0, 3.0));
    const std::string pa = "a=" + format_double(a);
    const std::string pb = "a=" + format_double(b);
    const std::string pz = "z=" + format_complex(z);

    guarded(suite, "hurwitz_zeta_at_zero", pa, tol, [&] {
      return make_report("hurwitz_zeta_at_zero", pa, hurwitz_zeta(0.0, a), 0.5 - a, tol);
    });
    guarded(suite, "hurwitz_derivative_vs_gamma", pb, tol, [&] {
      return make_report("hurwitz_derivative_vs_gamma", pb, std::exp(hurwitz_zeta_ds0(b)),
                         gamma(b) / std::sqrt(kTwoPi), tol, Tolerance::kRelative);
    });
    guarded(suite, "log_gamma_reflection", pz, tol, [&] {
      return make_report_mod_2pi_i("log_gamma_reflection", pz,
                                   log_gamma(z) + log_gamma(1.0 - z),
                                   std::log(kPi) - log_sin_pi(z), tol);
    });
    guarded(suite, "log_gamma_recursion", pz, tol, [&] {
      return make_report_mod_2pi_i("log_gamma_recursion", pz, log_gamma(z + 1.0),
                                   principal_log(z) + log_gamma(z), tol);
    });
  }
}

void regdet_suite(SuiteResult& suite, std::size_t samples, std::uint64_t seed, double tol) {
  suite.append(regdet_consistency_report(samples, seed, tol));
  for (std::size_t i = 0; i < samples; ++i) {
    auto rng = substream(seed, kHalfLineStream + i);
    const Complex rho = std::polar(uniform(rng, 0.3, 3.0), uniform(rng, -0.7, 0.7));
    const Complex a(uniform(rng, 0.05, 3.0), uniform(rng, -1.0, 1.0));
    const Complex lambda = rho * a;
    const std::string params = "rho=" + format_complex(rho) + " lambda=" + format_complex(lambda);
    guarded(suite, "halfline_hurwitz_vs_closed_form", params, tol, [&] {
      return make_report("halfline_hurwitz_vs_closed_form", params,
                         std::exp(regdet_halfline_log_numeric(rho, lambda)),
                         regdet(SpectrumDescriptor::half_line(rho, lambda)).det, tol,
                         Tolerance::kRelative);
    });
  }
}

void theorem21_suite(SuiteResult& suite, std::size_t samples, std::uint64_t seed, double tol) {
  for (std::size_t i = 0; i < samples; ++i) {
    auto rng = substream(seed, kTheoremStream + i);
    const std::size_t dim = 1 + static_cast<std::size_t>(uniform(rng, 0.0, 4.0));
    const double s = uniform(rng, 2.0, 8.0);
    std::vector<Complex> alphas;
    // (s - alpha_j)/2 in [0.1, 5].
    for (std::size_t j = 0; j < dim; ++j) alphas.emplace_back(s - 2.0 * uniform(rng, 0.1, 5.0));
    const std::string params = "s=" + format_double(s);
    guarded(suite, "disk_correlator_equals_real_l_factor", params, tol,
            [&] { return theorem21_specialization(s, alphas, tol); });
  }
}

void qgamma_suite(SuiteResult& suite, std::size_t samples, std::uint64_t seed, double tol) {
  for (std::size_t i = 0; i < samples; ++i) {
    auto rng = substream(seed, kQGammaStream + i);
    const double beta = uniform(rng, 0.3, 3.0);
    const double hbar = uniform(rng, 0.3, 2.0);
    const double lambda = uniform(rng, 0.2, 3.0);
    const auto params_q = QDeformParams::from_thermal(beta, hbar, std::span(&lambda, 1));
    const Complex q = params_q.q;
    const Complex t = params_q.t[0];
    const std::string params = "beta=" + format_double(beta) + " hbar=" + format_double(hbar) +
                               " lambda=" + format_double(lambda);

    guarded(suite, "q_pochhammer_times_q_gamma", params, tol, [&] {
      return make_report("q_pochhammer_times_q_gamma", params,
                         q_pochhammer_inf(t, q, 1e-15) * q_gamma(t, q, 1e-15), 1.0, tol);
    });
    guarded(suite, "mode_product_vs_q_gamma", params, tol, [&] {
      return make_report("mode_product_vs_q_gamma", params,
                         mode_partition_3d(beta, hbar, lambda, std::nullopt, 1e-14),
                         q_gamma(t, q, 1e-14), tol, Tolerance::kRelative);
    });
    const auto mode = static_cast<std::size_t>(uniform(rng, 0.0, 6.0));
    const std::string mode_params = params + " n=" + std::to_string(mode);
    guarded(suite, "mode_factor_vs_fullline_regdet", mode_params, tol, [&] {
      const auto check = mode_factor_check(beta, hbar, lambda, mode);
      return make_report("mode_factor_vs_fullline_regdet", mode_params, check.via_regdet,
                         check.direct, tol, Tolerance::kRelative);
    });
    guarded(suite, "mode_factor_vs_fullline_zeta", mode_params, tol, [&] {
      const auto check = mode_factor_check(beta, hbar, lambda, mode);
      return make_report("mode_factor_vs_fullline_zeta", mode_params, check.via_zeta,
                         check.direct, tol, Tolerance::kRelative);
    });
  }
}

ComplexMatrix random_matrix(std::mt19937_64& rng, int n) {
  ComplexMatrix a(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) a(r, c) = Complex(uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0));
  }
  return a;
}

void volumes_suite(SuiteResult& suite, std::size_t samples, std::uint64_t seed, double tol) {
  for (std::size_t i = 0; i < samples; ++i) {
    auto rng = substream(seed, kVolumesStream + i);
    const int n = 1 + static_cast<int>(uniform(rng, 0.0, 6.0));
    const ComplexMatrix a = random_matrix(rng, n);
    const std::string pn = "N=" + std::to_string(n);
    guarded(suite, "berezin_det_vs_lu", pn, tol, [&] {
      return make_report("berezin_det_vs_lu", pn, berezin_det(a),
                         Eigen::PartialPivLU<ComplexMatrix>(a).determinant(), tol);
    });

    const ComplexMatrix b = random_matrix(rng, n);
    const ComplexMatrix positive =
        b * b.adjoint() + 0.5 * ComplexMatrix::Identity(n, n);
    guarded(suite, "gaussian_times_det_is_one", pn, tol, [&] {
      const ComplexMatrix scaled = positive / kTwoPi;
      return make_report("gaussian_times_det_is_one", pn,
                         gaussian_integral(positive) *
                             Eigen::PartialPivLU<ComplexMatrix>(scaled).determinant(),
                         1.0, tol);
    });

    const std::size_t dims = 1 + static_cast<std::size_t>(uniform(rng, 0.0, 3.0));
    std::vector<double> lambdas;
    for (std::size_t j = 0; j < dims; ++j) lambdas.push_back(uniform(rng, 0.5, 3.0));
    const double beta = uniform(rng, 0.5, 2.0);
    const std::size_t degree = 60;
    const std::string pc = "beta=" + format_double(beta) + " dims=" + std::to_string(dims);
    guarded(suite, "character_truncation_within_tail_bound", pc, tol, [&] {
      const double closed = character_closed_form(beta, lambdas);
      const double truncated = character_trace(beta, lambdas, degree);
      const double bound = character_tail_bound(beta, lambdas, degree);
      auto report = make_report("character_truncation_within_tail_bound", pc, truncated, closed,
                                std::max(tol, bound + 16.0 * 2.2e-16 * closed),
                                Tolerance::kAbsolute);
      report.pass = report.pass && truncated <= closed * (1.0 + 1e-15);
      return report;
    });

    const double mu = uniform(rng, 0.1, 10.0);
    const std::string pm = pc + " mu=" + format_double(mu);
    guarded(suite, "superintegral_independent_of_mu", pm, tol, [&] {
      return make_report("superintegral_independent_of_mu", pm,
                         equivariant_volume_superintegral(lambdas, mu),
                         equivariant_volume(lambdas), tol, Tolerance::kRelative);
    });

    const std::vector<double> betas = {1e-2, 1e-3, 1e-4};
    guarded(suite, "classical_limit_ratio", pc, tol,
            [&] { return classical_limit_check(lambdas, betas).back(); });
  }
}

}  // namespace

bool is_suite_name(std::string_view name) {
  return std::find(std::begin(kSuiteNames), std::end(kSuiteNames), name) !=
         std::end(kSuiteNames);
}

SuiteResult run_suite(std::string_view name, std::size_t samples, std::uint64_t seed,
                      double tol) {
  SuiteResult suite;
  suite.suite = std::string(name);
  const auto start = std::chrono::steady_clock::now();
  if (name == "specfun") {
    specfun_suite(suite, samples, seed, tol);
  } else if (name == "regdet") {
    regdet_suite(suite, samples, seed, tol);
  } else if (name == "theorem21") {
    theorem21_suite(suite, samples, seed, tol);
  } else if (name == "qgamma") {
    qgamma_suite(suite, samples, seed, tol);
  } else if (name == "volumes") {
    volumes_suite(suite, samples, seed, tol);
  } else {
    throw DomainError("unknown suite '" + std::string(name) + "'");
  }
  suite.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return suite;
}

std::vector<SuiteResult> run_suites(std::string_view name, std::size_t samples,
                                    std::uint64_t seed, double tol) {
  std::vector<SuiteResult> out;
  if (name == "all") {
    for (auto suite : kSuiteNames) out.push_back(run_suite(suite, samples, seed, tol));
  } else {
    out.push_back(run_suite(name, samples, seed, tol));
  }
  return out;
}

}  // namespace zetareg
