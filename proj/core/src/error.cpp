#include "qcf/error.hpp"

namespace qcf {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::ScaleMismatch: return "ScaleMismatch";
    case ErrorKind::NonInvertibleConstantTerm: return "NonInvertibleConstantTerm";
    case ErrorKind::NonconvergentFormalProduct: return "NonconvergentFormalProduct";
    case ErrorKind::ZeroDenominatorFactor: return "ZeroDenominatorFactor";
    case ErrorKind::ZeroPartialNumerator: return "ZeroPartialNumerator";
    case ErrorKind::ZeroOddPartialDenominator: return "ZeroOddPartialDenominator";
    case ErrorKind::ZeroMultiplier: return "ZeroMultiplier";
    case ErrorKind::NormalizationImpossible: return "NormalizationImpossible";
    case ErrorKind::RecurrenceViolation: return "RecurrenceViolation";
    case ErrorKind::DegenerateSpecialization: return "DegenerateSpecialization";
    case ErrorKind::NumericOverflow: return "NumericOverflow";
    case ErrorKind::UnknownIdentity: return "UnknownIdentity";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace qcf
