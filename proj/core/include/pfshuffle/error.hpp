#pragma once

#include <stdexcept>
#include <string>

namespace pfshuffle {

/// Base of every error raised by the library. `kind()` is the stable
/// short name (e.g. "BadSupport") that the CLI prints and scripts match on.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define PFSHUFFLE_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                          \
   public:                                                             \
    explicit Name(const std::string& message) : Error(#Name, message) {} \
  }

PFSHUFFLE_DEFINE_ERROR(DomainError);
PFSHUFFLE_DEFINE_ERROR(NonDivisible);
PFSHUFFLE_DEFINE_ERROR(NegativeExponent);
PFSHUFFLE_DEFINE_ERROR(ParseError);
PFSHUFFLE_DEFINE_ERROR(BadSupport);
PFSHUFFLE_DEFINE_ERROR(BadColumn);
PFSHUFFLE_DEFINE_ERROR(BadLabels);
PFSHUFFLE_DEFINE_ERROR(LengthMismatch);
PFSHUFFLE_DEFINE_ERROR(NotInFamily);
PFSHUFFLE_DEFINE_ERROR(BadWord);
PFSHUFFLE_DEFINE_ERROR(InvalidResult);
PFSHUFFLE_DEFINE_ERROR(NotInImage);

#undef PFSHUFFLE_DEFINE_ERROR

}  // namespace pfshuffle
