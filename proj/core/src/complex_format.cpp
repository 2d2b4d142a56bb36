#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "zetareg/complex.hpp"

namespace zetareg {
namespace {

std::string format_real(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, x);
  return buf;
}

double parse_real(const std::string& text, const std::string& whole) {
  if (text.empty()) throw ParseError("empty number in complex literal '" + whole + "'");
  char* end = nullptr;
  const double value = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + text.size()) {
    throw ParseError("malformed complex literal '" + whole + "'");
  }
  return value;
}

}  // namespace

std::string format_double(double x, int digits) { return format_real(x, digits); }

std::string format_complex(Complex z, int digits) {
  std::string out = format_real(z.real(), digits);
  out += std::signbit(z.imag()) ? '-' : '+';
  out += format_real(std::abs(z.imag()), digits);
  out += 'i';
  return out;
}

Complex parse_complex(const std::string& raw) {
  std::string text;
  for (char c : raw) {
    if (!std::isspace(static_cast<unsigned char>(c))) text += c;
  }
  if (text.empty()) throw ParseError("empty complex literal");

  if (text.back() != 'i') return {parse_real(text, raw), 0.0};
  text.pop_back();

  // Split at the last sign that is neither leading nor part of an exponent.
  std::size_t split = std::string::npos;
  for (std::size_t k = text.size(); k-- > 1;) {
    if ((text[k] == '+' || text[k] == '-') && text[k - 1] != 'e' && text[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const std::string re_part = split == std::string::npos ? "" : text.substr(0, split);
  std::string im_part = split == std::string::npos ? text : text.substr(split);
  if (im_part.empty() || im_part == "+") im_part += "1";
  if (im_part == "-") im_part = "-1";
  const double re = re_part.empty() ? 0.0 : parse_real(re_part, raw);
  return {re, parse_real(im_part, raw)};
}

}  // namespace zetareg
