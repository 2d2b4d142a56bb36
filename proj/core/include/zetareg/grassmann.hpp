#ifndef ZETAREG_GRASSMANN_HPP_
#define ZETAREG_GRASSMANN_HPP_

#include <cstdint>
#include <map>

#include "zetareg/complex.hpp"

namespace zetareg {

// Element of the Grassmann algebra on N pairs of generators
// eta_1, etabar_1, ..., eta_N, etabar_N.
//
// A monomial is a bitmask: bit 2j is eta_{j+1}, bit 2j+1 is etabar_{j+1}.
// Each monomial is stored in canonical (ascending bit) order with the
// reordering sign folded into its coefficient.
class GrassmannElement {
 public:
  using Monomial = std::uint32_t;
  static constexpr int kMaxPairs = 15;

  explicit GrassmannElement(int pairs);

  static GrassmannElement scalar(int pairs, Complex c);
  static GrassmannElement eta(int pairs, int j);      // j is 0-based
  static GrassmannElement eta_bar(int pairs, int j);  // j is 0-based

  int pairs() const { return pairs_; }
  std::size_t size() const { return terms_.size(); }
  const std::map<Monomial, Complex>& terms() const { return terms_; }

  Complex coefficient(Monomial m) const;
  Complex scalar_part() const { return coefficient(0); }
  Monomial top_monomial() const;

  GrassmannElement& operator+=(const GrassmannElement& other);
  GrassmannElement& operator*=(Complex c);
  friend GrassmannElement operator+(GrassmannElement lhs, const GrassmannElement& rhs) {
    return lhs += rhs;
  }
  friend GrassmannElement operator*(GrassmannElement lhs, Complex c) { return lhs *= c; }
  friend GrassmannElement operator*(Complex c, GrassmannElement rhs) { return rhs *= c; }
  friend GrassmannElement operator*(const GrassmannElement& lhs, const GrassmannElement& rhs);

  // exp(x) = e^{c} sum_k (x - c)^k / k!, where c is the scalar part.  The
  // series terminates because the nilpotent part has finite degree.
  GrassmannElement exp() const;

  // Berezin integral with measure d eta_1 d etabar_1 ... d eta_N d etabar_N
  // and int eta_1 etabar_1 ... eta_N etabar_N d(...) = 1: the coefficient
  // of the top monomial.
  Complex berezin() const;

  // (-1)^{number of transpositions} needed to bring a*b into canonical
  // order, or 0 if a and b share a generator.
  static int product_sign(Monomial a, Monomial b);

 private:
  void add_term(Monomial m, Complex c);

  int pairs_;
  std::map<Monomial, Complex> terms_;
};

}  // namespace zetareg

#endif  // ZETAREG_GRASSMANN_HPP_
