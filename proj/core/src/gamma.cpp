#include <cmath>

#include "bernoulli.hpp"
#include "zetareg/specfun.hpp"

namespace zetareg {
namespace {

constexpr int kStirlingTerms = 8;
constexpr double kStirlingThreshold = 10.0;
constexpr double kLogPi = 1.1447298858494001741434273513531;

// Stirling series for log Gamma(w), Re w >= 10.
Complex stirling(Complex w) {
  const Complex log_w = principal_log(w);
  Complex result = (w - 0.5) * log_w - w + 0.5 * kLogTwoPi;
  const Complex inv_w2 = 1.0 / (w * w);
  Complex power = 1.0 / w;
  for (int k = 1; k <= kStirlingTerms; ++k) {
    result += detail::kBernoulliEven[k - 1] / ((2.0 * k) * (2.0 * k - 1.0)) * power;
    power *= inv_w2;
  }
  return result;
}

Complex log_gamma_right(Complex z) {
  Complex shift_logs{0.0, 0.0};
  while (z.real() < kStirlingThreshold) {
    shift_logs += principal_log(z);
    z += 1.0;
  }
  return stirling(z) - shift_logs;
}

}  // namespace

Complex log_sin_pi(Complex z) {
  if (std::abs(z.imag()) < 10.0) return principal_log(std::sin(kPi * z));
  if (z.imag() < 0.0) return std::conj(log_sin_pi(std::conj(z)));
  // sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 pi i z}); |e^{2 pi i z}| < e^{-20 pi}.
  const Complex w = std::exp(2.0 * kPi * kI * z);
  return Complex(-std::log(2.0), 0.5 * kPi) - kI * kPi * z + principal_log(1.0 - w);
}

Complex log_gamma(Complex z) {
  if (!is_finite(z)) throw DomainError("log_gamma: non-finite argument");
  if (near_gamma_pole(z)) throw PoleError("log_gamma: pole at " + format_complex(z, 6));
  if (z.real() >= 0.5) return checked(log_gamma_right(z), "log_gamma");
  return checked(kLogPi - log_sin_pi(z) - log_gamma_right(1.0 - z), "log_gamma");
}

Complex gamma(Complex z) { return checked(std::exp(log_gamma(z)), "gamma"); }

}  // namespace zetareg
