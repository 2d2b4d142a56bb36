#include "zetareg/errors.hpp"

namespace zetareg {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDomain: return "DomainError";
    case ErrorKind::kPole: return "PoleError";
    case ErrorKind::kPoleAtOne: return "PoleAtOne";
    case ErrorKind::kDivergence: return "DivergenceError";
    case ErrorKind::kSpectrum: return "SpectrumError";
    case ErrorKind::kZeroDivisor: return "ZeroDivisor";
    case ErrorKind::kSingularMatrix: return "SingularMatrix";
    case ErrorKind::kDimension: return "DimensionError";
    case ErrorKind::kNonNormalMatrix: return "NonNormalMatrix";
    case ErrorKind::kParse: return "ParseError";
  }
  return "Error";
}

}  // namespace zetareg
