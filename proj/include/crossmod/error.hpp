#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace crossmod {

/// Every failure the library reports. Axiom failures carry the offending
/// element tuple in Error::witness().
enum class ErrorKind {
  NotAGroup,
  NotAHom,
  NotAnAction,
  NotNormal,
  BoundExceeded,
  CM1Violation,
  CM2Violation,
  SquareNotCommuting,
  NotEquivariant,
  NotEpi,
  KernelNotCentral,
  NormalComplexViolation,
  PL1Violation,
  PL2Violation,
  PL3Violation,
  PL4Violation,
  PL5Violation,
  LiftingNotPreserved,
  LiftingNotTrivial,
  LiftingEscapesKernel,
  NotUnique,
  NoFactorization,
  NotWellDefined,
  StrategyMismatch,
  UndeclaredSymbol,
  RelatorCapExceeded,
  UndecidedAtLimit,
  ParseError,
  UnresolvedReference,
  Internal,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::vector<int> witness = {})
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        witness_(std::move(witness)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<int>& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::vector<int> witness_;
};

}  // namespace crossmod
