#ifndef ZETAREG_COMPLEX_HPP_
#define ZETAREG_COMPLEX_HPP_

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "zetareg/errors.hpp"

namespace zetareg {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kLogTwoPi = 1.8378770664093454835606594728112;
inline constexpr Complex kI{0.0, 1.0};

// Principal logarithm, arg in (-pi, pi].  std::log returns -pi for a
// negative real with a -0.0 imaginary part, which breaks the convention.
inline Complex principal_log(Complex z) {
  double arg = std::atan2(z.imag(), z.real());
  if (arg == -kPi) arg = kPi;
  return {std::log(std::abs(z)), arg};
}

// x^y = exp(y * principal_log(x)).
inline Complex principal_pow(Complex x, Complex y) {
  return std::exp(y * principal_log(x));
}

inline bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Throws DomainError when a component is NaN or infinite.
inline Complex checked(Complex z, const char* where) {
  if (!is_finite(z)) {
    throw DomainError(std::string(where) + ": non-finite result");
  }
  return z;
}

// Distance from z to the nearest integer n <= 0.
inline double distance_to_nonpositive_integer(Complex z) {
  const double n = std::min(0.0, std::round(z.real()));
  return std::abs(z - Complex(n, 0.0));
}

// True when z sits on a Gamma pole, up to a few ulps of the pole.
inline bool near_gamma_pole(Complex z) {
  const double n = std::min(0.0, std::round(z.real()));
  return std::abs(z - Complex(n, 0.0)) <= 8e-15 * (1.0 - n);
}

// Formats as "re+imi" / "re-imi" with 17 significant digits, the wire
// format of the CLI.
std::string format_complex(Complex z, int digits = 17);
std::string format_double(double x, int digits = 17);

// Parses "re+imi", "re-imi", "re", "imi", "i", "-i".  Throws ParseError.
Complex parse_complex(const std::string& text);

}  // namespace zetareg

#endif  // ZETAREG_COMPLEX_HPP_
