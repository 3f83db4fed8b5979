#include "crossmod/error.hpp"

namespace crossmod {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::NotAHom: return "NotAHom";
    case ErrorKind::NotAnAction: return "NotAnAction";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::CM1Violation: return "CM1Violation";
    case ErrorKind::CM2Violation: return "CM2Violation";
    case ErrorKind::SquareNotCommuting: return "SquareNotCommuting";
    case ErrorKind::NotEquivariant: return "NotEquivariant";
    case ErrorKind::NotEpi: return "NotEpi";
    case ErrorKind::KernelNotCentral: return "KernelNotCentral";
    case ErrorKind::NormalComplexViolation: return "NormalComplexViolation";
    case ErrorKind::PL1Violation: return "PL1Violation";
    case ErrorKind::PL2Violation: return "PL2Violation";
    case ErrorKind::PL3Violation: return "PL3Violation";
    case ErrorKind::PL4Violation: return "PL4Violation";
    case ErrorKind::PL5Violation: return "PL5Violation";
    case ErrorKind::LiftingNotPreserved: return "LiftingNotPreserved";
    case ErrorKind::LiftingNotTrivial: return "LiftingNotTrivial";
    case ErrorKind::LiftingEscapesKernel: return "LiftingEscapesKernel";
    case ErrorKind::NotUnique: return "NotUnique";
    case ErrorKind::NoFactorization: return "NoFactorization";
    case ErrorKind::NotWellDefined: return "NotWellDefined";
    case ErrorKind::StrategyMismatch: return "StrategyMismatch";
    case ErrorKind::UndeclaredSymbol: return "UndeclaredSymbol";
    case ErrorKind::RelatorCapExceeded: return "RelatorCapExceeded";
    case ErrorKind::UndecidedAtLimit: return "UndecidedAtLimit";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnresolvedReference: return "UnresolvedReference";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace crossmod
