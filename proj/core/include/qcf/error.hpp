#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qcf {

enum class ErrorKind {
  DivisionByZero,
  Parse,
  ScaleMismatch,
  NonInvertibleConstantTerm,
  NonconvergentFormalProduct,
  ZeroDenominatorFactor,
  ZeroPartialNumerator,
  ZeroOddPartialDenominator,
  ZeroMultiplier,
  NormalizationImpossible,
  RecurrenceViolation,
  DegenerateSpecialization,
  NumericOverflow,
  UnknownIdentity,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// All library failures are reported through this one exception type; the
/// kind distinguishes the contract that was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qcf
