#include <algorithm>
#include <cmath>
#include <utility>

#include "zetareg/report.hpp"

namespace zetareg {

VerificationReport make_report(std::string identity, std::string params, Complex lhs,
                               Complex rhs, double tol, Tolerance mode) {
  VerificationReport r;
  r.identity = std::move(identity);
  r.params = std::move(params);
  r.lhs = lhs;
  r.rhs = rhs;
  r.tol = tol;
  r.abs_err = std::abs(lhs - rhs);
  const double scale = std::abs(rhs);
  r.rel_err = scale > 0.0 ? r.abs_err / scale : r.abs_err;
  double allowed = tol;
  switch (mode) {
    case Tolerance::kMixed: allowed = tol * std::max(1.0, scale); break;
    case Tolerance::kRelative: allowed = tol * scale; break;
    case Tolerance::kAbsolute: allowed = tol; break;
  }
  r.pass = is_finite(lhs) && is_finite(rhs) && r.abs_err <= allowed;
  return r;
}

VerificationReport make_report_mod_2pi_i(std::string identity, std::string params,
                                         Complex lhs, Complex rhs, double tol) {
  Complex diff = lhs - rhs;
  diff.imag(std::remainder(diff.imag(), kTwoPi));
  VerificationReport r = make_report(std::move(identity), std::move(params), lhs, rhs, tol,
                                     Tolerance::kMixed);
  r.abs_err = std::abs(diff);
  const double scale = std::abs(rhs);
  r.rel_err = scale > 0.0 ? r.abs_err / scale : r.abs_err;
  r.pass = is_finite(lhs) && is_finite(rhs) && r.abs_err <= tol * std::max(1.0, scale);
  return r;
}

VerificationReport make_failure(std::string identity, std::string params,
                                const std::string& message, double tol) {
  VerificationReport r;
  r.identity = std::move(identity);
  r.params = std::move(params) + " error=" + message;
  r.lhs = Complex(NAN, NAN);
  r.rhs = Complex(NAN, NAN);
  r.abs_err = INFINITY;
  r.rel_err = INFINITY;
  r.tol = tol;
  r.pass = false;
  return r;
}

void SuiteResult::add(VerificationReport report) {
  if (report.pass) {
    ++pass_count;
  } else {
    ++fail_count;
  }
  reports.push_back(std::move(report));
}

void SuiteResult::append(const std::vector<VerificationReport>& more) {
  for (const auto& r : more) add(r);
}

}  // namespace zetareg
