#include <algorithm>
#include <cmath>
#include <string>

#include "bernoulli.hpp"
#include "zetareg/specfun.hpp"

namespace zetareg {
namespace {

constexpr int kCorrections = 10;  // B_2 .. B_20
constexpr int kMinShift = 15;

void check_hurwitz_argument(Complex a, const char* where) {
  if (!is_finite(a)) throw DomainError(std::string(where) + ": non-finite a");
  const bool right_half = a.real() > 0.0;
  const bool imaginary_axis = a.real() == 0.0 && a.imag() != 0.0;
  if (!right_half && !imaginary_axis) {
    throw DomainError(std::string(where) + ": requires Re a > 0 (or Re a = 0, Im a != 0)");
  }
}

int shift_for(double magnitude) {
  return std::max(kMinShift, static_cast<int>(std::ceil(magnitude)));
}

}  // namespace

Complex hurwitz_zeta(Complex s, Complex a) {
  check_hurwitz_argument(a, "hurwitz_zeta");
  if (!is_finite(s)) throw DomainError("hurwitz_zeta: non-finite s");
  if (s == Complex(1.0, 0.0)) throw PoleAtOneError("hurwitz_zeta: pole at s = 1");

  const int shift = std::max(shift_for(std::abs(a)), shift_for(std::abs(s)));

  Complex head{0.0, 0.0};
  for (int n = 0; n < shift; ++n) {
    head += std::exp(-s * principal_log(Complex(n, 0.0) + a));
  }

  const Complex x = a + static_cast<double>(shift);
  const Complex log_x = principal_log(x);
  const Complex x_pow_ms = std::exp(-s * log_x);  // x^{-s}
  Complex tail = x * x_pow_ms / (s - 1.0) + 0.5 * x_pow_ms;

  // sum_k B_2k/(2k)! (s)_{2k-1} x^{-s-2k+1}
  const Complex inv_x2 = 1.0 / (x * x);
  Complex rising = s;              // (s)_{2k-1}
  Complex power = x_pow_ms / x;    // x^{-s-2k+1}
  double factorial = 2.0;          // (2k)!
  for (int k = 1; k <= kCorrections; ++k) {
    tail += detail::kBernoulliEven[k - 1] / factorial * rising * power;
    rising *= (s + (2.0 * k - 1.0)) * (s + 2.0 * k);
    power *= inv_x2;
    factorial *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
  }
  return checked(head + tail, "hurwitz_zeta");
}

Complex hurwitz_zeta_ds0(Complex a) {
  check_hurwitz_argument(a, "hurwitz_zeta_ds0");
  const int shift = shift_for(std::abs(a));

  Complex head{0.0, 0.0};
  for (int n = 0; n < shift; ++n) head -= principal_log(Complex(n, 0.0) + a);

  // d/ds at s = 0 of x^{1-s}/(s-1) + x^{-s}/2 + sum_k B_2k/(2k)! (s)_{2k-1} x^{-s-2k+1};
  // (s)_{2k-1} vanishes at 0 with derivative (2k-2)!.
  const Complex x = a + static_cast<double>(shift);
  const Complex log_x = principal_log(x);
  Complex tail = x * log_x - x - 0.5 * log_x;
  const Complex inv_x2 = 1.0 / (x * x);
  Complex power = 1.0 / x;
  for (int k = 1; k <= kCorrections; ++k) {
    tail += detail::kBernoulliEven[k - 1] / ((2.0 * k) * (2.0 * k - 1.0)) * power;
    power *= inv_x2;
  }
  return checked(head + tail, "hurwitz_zeta_ds0");
}

}  // namespace zetareg
