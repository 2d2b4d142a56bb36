#ifndef ZETAREG_REGDET_HPP_
#define ZETAREG_REGDET_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "zetareg/complex.hpp"
#include "zetareg/report.hpp"

namespace zetareg {

// An operator, presented by its spectrum.
//   kHalfLine: { rho n + lambda : n >= 0 }
//   kFullLine: { rho n + lambda : n in Z }, Im rho > 0
//   kConstant: { rho, rho, ... }
enum class SpectrumKind { kHalfLine, kFullLine, kConstant };

struct SpectrumDescriptor {
  SpectrumKind kind = SpectrumKind::kHalfLine;
  Complex rho{1.0, 0.0};
  Complex lambda{0.0, 0.0};

  static SpectrumDescriptor half_line(Complex rho, Complex lambda) {
    return {SpectrumKind::kHalfLine, rho, lambda};
  }
  static SpectrumDescriptor full_line(Complex rho, Complex lambda) {
    return {SpectrumKind::kFullLine, rho, lambda};
  }
  static SpectrumDescriptor constant(Complex rho) {
    return {SpectrumKind::kConstant, rho, Complex{}};
  }
};

std::string to_string(SpectrumKind kind);

// Throws SpectrumError if the descriptor has a zero mode, a Gamma pole,
// or (full line) Im rho <= 0 or lambda/rho integral.
void validate(const SpectrumDescriptor& spec);

struct RegDetResult {
  Complex log_det;
  Complex det;
  std::string branch_note;
};

// Zeta-regularized determinant, closed form:
//   half line   rho^{1/2 - lambda/rho} sqrt(2 pi) / Gamma(lambda/rho)
//   constant    rho^{1/2}
//   full line   1 - exp(2 pi i lambda / rho)
RegDetResult regdet(const SpectrumDescriptor& spec);

// -d/ds zeta_rho(s, lambda) at s = 0 for the half line, assembled from
// the Hurwitz routines:  zeta_rho(s, lambda) = rho^{-s} zeta(s, lambda/rho).
// The factorization needs arg rho + arg(n + lambda/rho) in (-pi, pi] for
// every n, which the caller is responsible for.  Throws SpectrumError
// when lambda/rho is outside the Hurwitz domain.
Complex regdet_halfline_log_numeric(Complex rho, Complex lambda);

// How arguments of the reflected half-spectrum { lambda - rho n } are
// measured.  kCounterClockwise takes log(-rho) = log(rho) + i pi, the
// convention under which the full-line product equals
// 1 - exp(2 pi i lambda/rho) for Im rho > 0.  kPrincipal uses the
// principal log(-rho) = log(rho) - i pi and yields the conjugate
// orientation 1 - exp(-2 pi i lambda/rho).
enum class ReflectedBranch { kCounterClockwise, kPrincipal };

// Full-line product via the spectral zeta function
//   zeta*(s) = zeta_rho(s, lambda) + zeta_{-rho}(s, lambda) - lambda^{-s}.
// lambda/rho is first reduced by integers so 0 <= Re(lambda/rho) < 1;
// the two half-lines then become rho^{-s} zeta(s, a) and
// (-rho)^{-s} zeta(s, 1 - a).  Returns exp(-zeta*'(0)).
Complex regdet_fullline_numeric(Complex rho, Complex lambda,
                                ReflectedBranch branch = ReflectedBranch::kCounterClockwise);

// Disk correlator as det D_0 / det D, where D has spectrum
// (mu/2)(hbar n + lambda), n >= 0, and D_0 is multiplication by pi mu.
// Throws PoleError when lambda/hbar is 0, -1, -2, ...
Complex disk_det_ratio(double mu, double hbar, double lambda);

// hbar^{-1/2} (2/(mu hbar))^{-lambda/hbar} Gamma(lambda/hbar).
Complex disk_det_ratio_closed_form(double mu, double hbar, double lambda);

// Seeded comparison of the two full-line routes and of the two disk
// ratio routes.  Two reports per sample; tolerance 1e-8.
std::vector<VerificationReport> regdet_consistency_report(std::size_t samples,
                                                          std::uint64_t seed,
                                                          double tol = 1e-8);

}  // namespace zetareg

#endif  // ZETAREG_REGDET_HPP_
