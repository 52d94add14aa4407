#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qjensen {

enum class ErrorKind {
  ZeroDivision,
  InvalidUnit,
  InvalidArgument,
  DegreeCapExceeded,
  NormalNotReal,
  LogOfZero,
  ZeroPolynomial,
  ClassificationInconsistency,
  ZeroDenominator,
  InvalidDenominator,
  InvalidPole,
  PoleOnBoundary,
  PoleOutsideRegion,
  PoleAtOrigin,
  ZeroOnBoundary,
  ZeroAtOrigin,
  NonFiniteIntegrand,
  DegeneratePoint,
  HypothesisViolation,
  ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries a kind so callers (the CLI in
// particular) can map it to an exit code without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qjensen
