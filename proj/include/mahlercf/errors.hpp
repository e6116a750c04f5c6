#pragma once

#include <stdexcept>
#include <string>

namespace mahlercf {

// Base of every domain error raised by the library. The CLI maps these to
// exit code 1; AssertionFailed (an identity that should hold but did not)
// maps to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define MAHLERCF_DEFINE_ERROR(Name)              \
  class Name : public Error {                    \
   public:                                       \
    explicit Name(const std::string& what)       \
        : Error(std::string(#Name ": ") + what) {} \
  };

MAHLERCF_DEFINE_ERROR(ParseError)
MAHLERCF_DEFINE_ERROR(InvalidArgument)
MAHLERCF_DEFINE_ERROR(DivisionByZero)
MAHLERCF_DEFINE_ERROR(IndeterminateValuation)
MAHLERCF_DEFINE_ERROR(ZeroLeadingCoefficient)
MAHLERCF_DEFINE_ERROR(PrecisionExhausted)
MAHLERCF_DEFINE_ERROR(IndexOutOfRange)
MAHLERCF_DEFINE_ERROR(NotApproximating)
MAHLERCF_DEFINE_ERROR(ArgumentTooSmall)
MAHLERCF_DEFINE_ERROR(ZeroFactor)
MAHLERCF_DEFINE_ERROR(ZeroValue)
MAHLERCF_DEFINE_ERROR(UnsupportedDegree)
MAHLERCF_DEFINE_ERROR(InsufficientTerms)
MAHLERCF_DEFINE_ERROR(InsufficientCoefficients)
MAHLERCF_DEFINE_ERROR(InsufficientData)
MAHLERCF_DEFINE_ERROR(NotFound)

#undef MAHLERCF_DEFINE_ERROR

// Raised when an identity that the mathematics guarantees fails to hold.
// Carries a human-readable witness (parameter, index, value).
class AssertionFailed : public std::logic_error {
 public:
  explicit AssertionFailed(const std::string& witness)
      : std::logic_error("AssertionFailed: " + witness), witness_(witness) {}
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

}  // namespace mahlercf
