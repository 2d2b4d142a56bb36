#include <bit>
#include <string>

#include "zetareg/grassmann.hpp"

namespace zetareg {

GrassmannElement::GrassmannElement(int pairs) : pairs_(pairs) {
  if (pairs < 0 || pairs > kMaxPairs) {
    throw DimensionError("GrassmannElement: pairs must be in [0, " +
                         std::to_string(kMaxPairs) + "]");
  }
}

GrassmannElement GrassmannElement::scalar(int pairs, Complex c) {
  GrassmannElement e(pairs);
  e.add_term(0, c);
  return e;
}

GrassmannElement GrassmannElement::eta(int pairs, int j) {
  GrassmannElement e(pairs);
  if (j < 0 || j >= pairs) throw DimensionError("GrassmannElement::eta: index out of range");
  e.add_term(Monomial{1} << (2 * j), 1.0);
  return e;
}

GrassmannElement GrassmannElement::eta_bar(int pairs, int j) {
  GrassmannElement e(pairs);
  if (j < 0 || j >= pairs) {
    throw DimensionError("GrassmannElement::eta_bar: index out of range");
  }
  e.add_term(Monomial{1} << (2 * j + 1), 1.0);
  return e;
}

Complex GrassmannElement::coefficient(Monomial m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Complex(0.0, 0.0) : it->second;
}

GrassmannElement::Monomial GrassmannElement::top_monomial() const {
  return pairs_ == 0 ? Monomial{0} : (Monomial{1} << (2 * pairs_)) - 1;
}

void GrassmannElement::add_term(Monomial m, Complex c) {
  if (c == Complex(0.0, 0.0)) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == Complex(0.0, 0.0)) terms_.erase(it);
  }
}

int GrassmannElement::product_sign(Monomial a, Monomial b) {
  if ((a & b) != 0) return 0;
  // Each generator of b moves left past every larger generator of a.
  int swaps = 0;
  for (Monomial rest = b; rest != 0; rest &= rest - 1) {
    const Monomial lowest = rest & (~rest + 1);
    swaps += std::popcount(a & ~(lowest | (lowest - 1)));
  }
  return (swaps % 2 == 0) ? 1 : -1;
}

GrassmannElement& GrassmannElement::operator+=(const GrassmannElement& other) {
  if (other.pairs_ != pairs_) throw DimensionError("GrassmannElement: mismatched algebras");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

GrassmannElement& GrassmannElement::operator*=(Complex c) {
  if (c == Complex(0.0, 0.0)) {
    terms_.clear();
    return *this;
  }
  for (auto& term : terms_) term.second *= c;
  return *this;
}

GrassmannElement operator*(const GrassmannElement& lhs, const GrassmannElement& rhs) {
  if (lhs.pairs_ != rhs.pairs_) {
    throw DimensionError("GrassmannElement: mismatched algebras");
  }
  GrassmannElement out(lhs.pairs_);
  for (const auto& [ma, ca] : lhs.terms_) {
    for (const auto& [mb, cb] : rhs.terms_) {
      const int sign = GrassmannElement::product_sign(ma, mb);
      if (sign != 0) out.add_term(ma | mb, static_cast<double>(sign) * ca * cb);
    }
  }
  return out;
}

GrassmannElement GrassmannElement::exp() const {
  const Complex c = scalar_part();
  GrassmannElement nilpotent = *this;
  nilpotent.terms_.erase(0);

  GrassmannElement sum = scalar(pairs_, 1.0);
  GrassmannElement power = scalar(pairs_, 1.0);
  for (int k = 1; k <= 2 * pairs_; ++k) {
    power = power * nilpotent;
    power *= 1.0 / k;
    if (power.terms_.empty()) break;
    sum += power;
  }
  sum *= std::exp(c);
  return sum;
}

Complex GrassmannElement::berezin() const { return coefficient(top_monomial()); }

}  // namespace zetareg
