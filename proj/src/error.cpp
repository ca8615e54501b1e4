#include "fourman/error.hpp"

namespace fourman {

std::string_view error_kind_name(ErrorKind kind)
{
  switch (kind) {
  case ErrorKind::InvalidExpr: return "InvalidExpr";
  case ErrorKind::NonIntegralQuotient: return "NonIntegralQuotient";
  case ErrorKind::InconsistentFlags: return "InconsistentFlags";
  case ErrorKind::DuplicateName: return "DuplicateName";
  case ErrorKind::UnknownPrimitive: return "UnknownPrimitive";
  case ErrorKind::NonDivisibleBranch: return "NonDivisibleBranch";
  case ErrorKind::NegativeDegree: return "NegativeDegree";
  case ErrorKind::AdmissibilityFail: return "AdmissibilityFail";
  case ErrorKind::MissingCapability: return "MissingCapability";
  case ErrorKind::UnsupportedPattern: return "UnsupportedPattern";
  case ErrorKind::UnknownFlag: return "UnknownFlag";
  case ErrorKind::UnsupportedGroup: return "UnsupportedGroup";
  case ErrorKind::NoSplit: return "NoSplit";
  case ErrorKind::InfeasiblePoint: return "InfeasiblePoint";
  case ErrorKind::BadParity: return "BadParity";
  case ErrorKind::BadP: return "BadP";
  case ErrorKind::MismatchedInvariants: return "MismatchedInvariants";
  case ErrorKind::SyntaxError: return "SyntaxError";
  case ErrorKind::RegistrySealed: return "RegistrySealed";
  }
  return "Unknown";
}

} // namespace fourman
