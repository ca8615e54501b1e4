#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fourman {

enum class ErrorKind {
  InvalidExpr,
  NonIntegralQuotient,
  InconsistentFlags,
  DuplicateName,
  UnknownPrimitive,
  NonDivisibleBranch,
  NegativeDegree,
  AdmissibilityFail,
  MissingCapability,
  UnsupportedPattern,
  UnknownFlag,
  UnsupportedGroup,
  NoSplit,
  InfeasiblePoint,
  BadParity,
  BadP,
  MismatchedInvariants,
  SyntaxError,
  RegistrySealed,
};

std::string_view error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind)
  {
  }

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

/// Parse failure with a 1-based source position.
class SyntaxError : public Error {
public:
  SyntaxError(const std::string& message, int line, int column)
    : Error(ErrorKind::SyntaxError, message + " at " + std::to_string(line) + ":" + std::to_string(column)),
      line_(line), column_(column)
  {
  }

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

private:
  int line_;
  int column_;
};

} // namespace fourman
