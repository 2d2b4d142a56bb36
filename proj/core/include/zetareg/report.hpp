#ifndef ZETAREG_REPORT_HPP_
#define ZETAREG_REPORT_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "zetareg/complex.hpp"

namespace zetareg {

// How a report decides pass/fail.
//   kMixed     abs_err <= tol * max(1, |rhs|)
//   kRelative  abs_err <= tol * |rhs|
//   kAbsolute  abs_err <= tol
enum class Tolerance { kMixed, kRelative, kAbsolute };

struct VerificationReport {
  std::string identity;
  std::string params;
  Complex lhs;
  Complex rhs;
  double abs_err = 0.0;
  double rel_err = 0.0;
  double tol = 0.0;
  bool pass = false;
};

VerificationReport make_report(std::string identity, std::string params, Complex lhs,
                               Complex rhs, double tol, Tolerance mode = Tolerance::kMixed);

// Report for an identity that holds modulo 2 pi i (log-Gamma relations).
// The difference is reduced into (-pi, pi] before measuring.
VerificationReport make_report_mod_2pi_i(std::string identity, std::string params,
                                         Complex lhs, Complex rhs, double tol);

// Report for an evaluation that threw instead of returning a value.
VerificationReport make_failure(std::string identity, std::string params,
                                const std::string& message, double tol);

struct SuiteResult {
  std::string suite;
  std::vector<VerificationReport> reports;
  std::size_t pass_count = 0;
  std::size_t fail_count = 0;
  double wall_seconds = 0.0;

  void add(VerificationReport report);
  void append(const std::vector<VerificationReport>& more);
  bool ok() const { return fail_count == 0; }
};

}  // namespace zetareg

#endif  // ZETAREG_REPORT_HPP_
