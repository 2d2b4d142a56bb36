#include <gtest/gtest.h>

#include <random>

#include "zetareg/complex.hpp"
#include "zetareg/random.hpp"

namespace zetareg {
namespace {

TEST(ComplexTest, PrincipalLogOnNegativeAxis) {
  EXPECT_DOUBLE_EQ(principal_log(Complex(-1.0, 0.0)).imag(), kPi);
  EXPECT_DOUBLE_EQ(principal_log(Complex(-1.0, -0.0)).imag(), kPi);
  EXPECT_DOUBLE_EQ(principal_log(Complex(0.0, -2.0)).imag(), -kPi / 2);
}

TEST(ComplexTest, PrincipalPowMatchesDefinition) {
  const Complex x(-4.0, 0.0);
  const Complex r = principal_pow(x, 0.5);
  EXPECT_NEAR(r.real(), 0.0, 1e-15);
  EXPECT_NEAR(r.imag(), 2.0, 1e-15);
}

TEST(ComplexTest, GammaPoleDetection) {
  EXPECT_TRUE(near_gamma_pole(Complex(0.0, 0.0)));
  EXPECT_TRUE(near_gamma_pole(Complex(-3.0, 0.0)));
  EXPECT_FALSE(near_gamma_pole(Complex(1.0, 0.0)));
  EXPECT_FALSE(near_gamma_pole(Complex(-3.0, 1e-6)));
  EXPECT_FALSE(near_gamma_pole(Complex(-0.5, 0.0)));
}

TEST(ComplexTest, FormatUsesSignedImaginaryPart) {
  EXPECT_EQ(format_complex(Complex(1.0, -2.0)), "1-2i");
  EXPECT_EQ(format_complex(Complex(0.5, 0.25)), "0.5+0.25i");
  EXPECT_EQ(format_complex(Complex(-22.140692632779267, 0.0), 12), "-22.1406926328+0i");
}

TEST(ComplexTest, ParseAcceptsCommonForms) {
  EXPECT_EQ(parse_complex("3"), Complex(3.0, 0.0));
  EXPECT_EQ(parse_complex("i"), Complex(0.0, 1.0));
  EXPECT_EQ(parse_complex("-i"), Complex(0.0, -1.0));
  EXPECT_EQ(parse_complex("2.5i"), Complex(0.0, 2.5));
  EXPECT_EQ(parse_complex("1e-3-2e+2i"), Complex(1e-3, -200.0));
  EXPECT_EQ(parse_complex(" 1 + 2i "), Complex(1.0, 2.0));
  EXPECT_EQ(parse_complex("-1-i"), Complex(-1.0, -1.0));
}

TEST(ComplexTest, ParseRejectsGarbage) {
  EXPECT_THROW(parse_complex(""), ParseError);
  EXPECT_THROW(parse_complex("abc"), ParseError);
  EXPECT_THROW(parse_complex("1+2j"), ParseError);
  EXPECT_THROW(parse_complex("1+xi"), ParseError);
}

// Seventeen significant digits round-trip every double.
TEST(ComplexTest, FormatParseRoundTripProperty) {
  auto rng = substream(11, 0);
  std::uniform_int_distribution<int> exponent(-300, 300);
  for (int k = 0; k < 2000; ++k) {
    const Complex z(uniform(rng, -1.0, 1.0) * std::pow(10.0, exponent(rng)),
                    uniform(rng, -1.0, 1.0) * std::pow(10.0, exponent(rng)));
    EXPECT_EQ(parse_complex(format_complex(z)), z) << format_complex(z);
  }
}

TEST(RandomTest, SubstreamsAreReproducibleAndDistinct) {
  auto a = substream(7, 3);
  auto b = substream(7, 3);
  auto c = substream(7, 4);
  const auto first_a = a();
  EXPECT_EQ(first_a, b());
  EXPECT_NE(first_a, c());
}

}  // namespace
}  // namespace zetareg
