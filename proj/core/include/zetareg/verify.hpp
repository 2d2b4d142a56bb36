#ifndef ZETAREG_VERIFY_HPP_
#define ZETAREG_VERIFY_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "zetareg/report.hpp"

namespace zetareg {

// Seeded identity suites.  Every sample i draws from substream(seed, i),
// so a suite's output depends only on (samples, seed, tol).
//
//   specfun    zeta(0,a) = 1/2 - a; exp zeta'(0,a) = Gamma(a)/sqrt(2 pi);
//              log-Gamma reflection and recursion (mod 2 pi i)
//   regdet     full-line numeric vs closed form; disk ratio assembly;
//              half-line Hurwitz assembly vs closed form
//   theorem21  disk correlator at mu = 2/pi, hbar = 1 vs real L-factor
//   qgamma     (t;q)_inf Gamma_q(t) = 1; 3d mode product vs Gamma_q;
//              per-mode factor vs full-line determinant
//   volumes    Berezin vs LU determinant; Gaussian normalization;
//              character truncation; classical limit; mu-independence
inline constexpr std::string_view kSuiteNames[] = {"specfun", "regdet", "theorem21", "qgamma",
                                                   "volumes"};

bool is_suite_name(std::string_view name);

// Throws DomainError for an unknown suite name.
SuiteResult run_suite(std::string_view name, std::size_t samples, std::uint64_t seed,
                      double tol);

// "all" expands to every suite in kSuiteNames order.
std::vector<SuiteResult> run_suites(std::string_view name, std::size_t samples,
                                    std::uint64_t seed, double tol);

}  // namespace zetareg

#endif  // ZETAREG_VERIFY_HPP_
