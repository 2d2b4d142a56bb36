#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "zetareg/random.hpp"
#include "zetareg/specfun.hpp"

namespace zetareg {
namespace {

double rel_err(Complex got, Complex want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

// Bernoulli numbers B_0..B_n from the recurrence sum_{k<m+1} C(m+1,k) B_k = 0.
std::vector<double> bernoulli_numbers(int n) {
  std::vector<double> b(n + 1, 0.0);
  b[0] = 1.0;
  for (int m = 1; m <= n; ++m) {
    double sum = 0.0;
    double binom = 1.0;  // C(m+1, k)
    for (int k = 0; k < m; ++k) {
      sum += binom * b[k];
      binom = binom * (m + 1 - k) / (k + 1);
    }
    b[m] = -sum / (m + 1);
  }
  return b;
}

// Size of the largest intermediate sum in the Euler-Maclaurin evaluation.
// For Re s < 0 the head terms grow like n^{-Re s} and cancel, so the
// attainable absolute accuracy is a few ulps of this scale.
double cancellation_scale(Complex s, Complex a) {
  const int shift = std::max({15, static_cast<int>(std::ceil(std::abs(a))),
                              static_cast<int>(std::ceil(std::abs(s)))});
  double scale = 0.0;
  for (int n = 0; n < shift; ++n) scale += std::abs(principal_pow(Complex(n, 0.0) + a, -s));
  const Complex x = a + static_cast<double>(shift);
  return scale + std::abs(principal_pow(x, 1.0 - s) / (s - 1.0));
}

double ulps_of(Complex s, Complex a) {
  return 16.0 * std::numeric_limits<double>::epsilon() * cancellation_scale(s, a);
}

double bernoulli_polynomial(int n, double x) {
  const auto b = bernoulli_numbers(n);
  double sum = 0.0;
  double binom = 1.0;
  for (int k = 0; k <= n; ++k) {
    sum += binom * b[k] * std::pow(x, n - k);
    binom = binom * (n - k) / (k + 1);
  }
  return sum;
}

TEST(HurwitzZetaTest, BaselSum) {
  EXPECT_LT(rel_err(hurwitz_zeta(2.0, 1.0), 1.6449340668482264365), 1e-14);
}

TEST(HurwitzZetaTest, ValueAtZeroIsHalfMinusA) {
  EXPECT_NEAR(hurwitz_zeta(0.0, 1.0).real(), -0.5, 1e-14);
  EXPECT_NEAR(hurwitz_zeta(0.0, 0.25).real(), 0.25, 1e-14);
}

TEST(HurwitzZetaTest, NegativeIntegersMatchBernoulliPolynomials) {
  EXPECT_NEAR(hurwitz_zeta(-1.0, 1.0).real(), -1.0 / 12.0, 1e-13);
  for (int m = 1; m <= 12; ++m) {
    for (double a : {0.3, 1.0, 2.7, 6.5}) {
      const double want = -bernoulli_polynomial(m + 1, a) / (m + 1);
      const Complex got = hurwitz_zeta(-static_cast<double>(m), a);
      EXPECT_NEAR(got.real(), want,
                  1e-12 * std::max(1.0, std::abs(want)) + ulps_of(-static_cast<double>(m), a))
          << "m=" << m << " a=" << a;
      EXPECT_NEAR(got.imag(), 0.0, 1e-12 + ulps_of(-static_cast<double>(m), a));
    }
  }
}

struct FrozenValue {
  Complex s, a, value;
};

// Reference values from a 30-digit arbitrary-precision evaluation.
TEST(HurwitzZetaTest, FrozenComplexValues) {
  const std::vector<FrozenValue> cases = {
      {{0.5, 14.134725}, {1.0, 0.0}, {1.767429841384903915e-8, -1.1102028930923116747e-7}},
      {{3.0, -2.0}, {0.3, 0.7}, {-0.042962352664720317963, 0.14451964814511734125}},
      {{-2.5, 1.0}, {2.5, -1.0}, {1.5097995522685791332, 2.1955868960245599806}},
      {{25.0, 0.0}, {0.8, 0.0}, {264.69779643210822416, 0.0}},
      {{-7.0, 0.0}, {0.5, 0.0}, {-0.0041341145833333333333, 0.0}},
      {{0.5, 2.0}, {0.0, 0.5}, {28.085960209897679365, 16.836201989973564998}},
      {{1.5, 0.0}, {10.0, 3.0}, {0.62610689417061080685, -0.096394634138880522543}},
      {{-0.5, 0.0}, {0.25, 0.0}, {0.090322258761246243874, 0.0}},
  };
  for (const auto& c : cases) {
    const Complex got = hurwitz_zeta(c.s, c.a);
    // The first case sits next to a zeta zero; compare absolutely there.
    EXPECT_LT(std::abs(got - c.value),
              1e-12 * std::max(1.0, std::abs(c.value)) + ulps_of(c.s, c.a))
        << "s=" << c.s << " a=" << c.a << " got " << got;
  }
}

// |zeta(s,a) - sum_{n<N} (n+a)^{-s}| <= (N + a - 1)^{1-sigma} / (sigma - 1) for real a > 0.
// The partial sum is accumulated in extended precision.
TEST(HurwitzZetaTest, MatchesDirectSumWithinIntegralTailBound) {
  constexpr int kTerms = 20000;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    auto rng = substream(2024, i);
    const Complex s(uniform(rng, 1.5, 6.0), uniform(rng, -5.0, 5.0));
    const double a = uniform(rng, 0.1, 5.0);
    using Wide = std::complex<long double>;
    const Wide ws(s.real(), s.imag());
    Wide wide{0.0L, 0.0L};
    for (int n = 0; n < kTerms; ++n) wide += std::exp(-ws * std::log(static_cast<long double>(n) + a));
    const Complex partial(static_cast<double>(wide.real()), static_cast<double>(wide.imag()));
    const double tail = std::pow(kTerms + a - 1.0, 1.0 - s.real()) / (s.real() - 1.0);
    // The double-precision evaluation itself is good to a few ulps of the
    // leading terms.
    const double bound = tail + ulps_of(s, a);
    EXPECT_LE(std::abs(hurwitz_zeta(s, a) - partial), bound) << "s=" << s << " a=" << a;
  }
}

TEST(HurwitzZetaTest, ValueAtZeroProperty) {
  for (std::uint64_t i = 0; i < 100; ++i) {
    auto rng = substream(99, i);
    const double a = uniform(rng, 0.0, 10.0) + 1e-9;
    EXPECT_NEAR(hurwitz_zeta(0.0, a).real(), 0.5 - a, 1e-12 * std::max(1.0, a));
  }
}

TEST(HurwitzZetaTest, ShiftRecurrence) {
  // zeta(s, a) = a^{-s} + zeta(s, a + 1)
  for (std::uint64_t i = 0; i < 200; ++i) {
    auto rng = substream(5, i);
    const Complex s(uniform(rng, -10.0, 10.0), uniform(rng, -10.0, 10.0));
    const Complex a(uniform(rng, 0.1, 4.0), uniform(rng, -2.0, 2.0));
    const Complex lhs = hurwitz_zeta(s, a);
    const Complex rhs = principal_pow(a, -s) + hurwitz_zeta(s, a + 1.0);
    const double tol =
        1e-11 * std::max(1.0, std::abs(lhs)) + ulps_of(s, a) + ulps_of(s, a + 1.0);
    EXPECT_LT(std::abs(lhs - rhs), tol) << s << " " << a;
  }
}

TEST(HurwitzZetaTest, Errors) {
  EXPECT_THROW(hurwitz_zeta(1.0, 0.5), PoleAtOneError);
  EXPECT_THROW(hurwitz_zeta(2.0, 0.0), DomainError);
  EXPECT_THROW(hurwitz_zeta(2.0, -0.5), DomainError);
  EXPECT_THROW(hurwitz_zeta(2.0, Complex(-1.0, 1.0)), DomainError);
  EXPECT_THROW(hurwitz_zeta_ds0(-0.5), DomainError);
  EXPECT_NO_THROW(hurwitz_zeta(Complex(1.0, 1e-9), 0.5));
}

TEST(HurwitzZetaDerivativeTest, Examples) {
  EXPECT_NEAR(hurwitz_zeta_ds0(1.0).real(), -0.9189385332046727, 1e-14);
  EXPECT_NEAR(hurwitz_zeta_ds0(0.5).real(), -0.34657359027997265, 1e-14);
  EXPECT_NEAR(hurwitz_zeta_ds0(2.0).real(), -0.9189385332046727, 1e-14);
}

TEST(HurwitzZetaDerivativeTest, FrozenComplexValues) {
  const std::vector<std::pair<Complex, Complex>> cases = {
      {{0.3, 0.7}, {-1.0121088457028069227, -1.22395736571368873}},
      {{0.0, -0.5}, {-0.4167368518315067967, 1.8148546257003243819}},
      {{4.0, -3.0}, {-0.28412972861855537721, -4.0705884301116450038}},
      {{0.05, 0.0}, {2.0499406678470580267, 0.0}},
  };
  for (const auto& [a, want] : cases) {
    EXPECT_LT(rel_err(hurwitz_zeta_ds0(a), want), 1e-12) << a;
  }
}

// Central difference of hurwitz_zeta as an independent check of the
// term-by-term derivative.
TEST(HurwitzZetaDerivativeTest, AgreesWithFiniteDifference) {
  const double h = 1e-5;
  for (std::uint64_t i = 0; i < 50; ++i) {
    auto rng = substream(77, i);
    const Complex a(uniform(rng, 0.1, 8.0), uniform(rng, -3.0, 3.0));
    const Complex fd = (hurwitz_zeta(h, a) - hurwitz_zeta(-h, a)) / (2.0 * h);
    EXPECT_LT(std::abs(fd - hurwitz_zeta_ds0(a)), 1e-8 * std::max(1.0, std::abs(fd))) << a;
  }
}

TEST(HurwitzZetaDerivativeTest, ExponentialMatchesGammaProperty) {
  for (std::uint64_t i = 0; i < 100; ++i) {
    auto rng = substream(31, i);
    const double a = uniform(rng, 0.1, 20.0);
    const Complex lhs = std::exp(hurwitz_zeta_ds0(a));
    const Complex rhs = gamma(a) / std::sqrt(kTwoPi);
    EXPECT_LT(rel_err(lhs, rhs), 1e-9) << "a=" << a;
  }
}

}  // namespace
}  // namespace zetareg
