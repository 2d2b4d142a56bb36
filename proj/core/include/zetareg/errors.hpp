#ifndef ZETAREG_ERRORS_HPP_
#define ZETAREG_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace zetareg {

// Every failure the library reports carries one of these kinds.  The CLI
// maps kinds onto exit codes, so new kinds need a matching entry there.
enum class ErrorKind {
  kDomain,
  kPole,
  kPoleAtOne,
  kDivergence,
  kSpectrum,
  kZeroDivisor,
  kSingularMatrix,
  kDimension,
  kNonNormalMatrix,
  kParse,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

#define ZETAREG_DEFINE_ERROR(Name, Kind)                          \
  class Name : public Error {                                     \
   public:                                                        \
    explicit Name(const std::string& what) : Error(Kind, what) {} \
  };

ZETAREG_DEFINE_ERROR(DomainError, ErrorKind::kDomain)
ZETAREG_DEFINE_ERROR(PoleError, ErrorKind::kPole)
ZETAREG_DEFINE_ERROR(PoleAtOneError, ErrorKind::kPoleAtOne)
ZETAREG_DEFINE_ERROR(DivergenceError, ErrorKind::kDivergence)
ZETAREG_DEFINE_ERROR(SpectrumError, ErrorKind::kSpectrum)
ZETAREG_DEFINE_ERROR(ZeroDivisorError, ErrorKind::kZeroDivisor)
ZETAREG_DEFINE_ERROR(SingularMatrixError, ErrorKind::kSingularMatrix)
ZETAREG_DEFINE_ERROR(DimensionError, ErrorKind::kDimension)
ZETAREG_DEFINE_ERROR(NonNormalMatrixError, ErrorKind::kNonNormalMatrix)
ZETAREG_DEFINE_ERROR(ParseError, ErrorKind::kParse)

#undef ZETAREG_DEFINE_ERROR

}  // namespace zetareg

#endif  // ZETAREG_ERRORS_HPP_
