#include "hyperlab/error.hpp"

namespace hyperlab {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::MixedScalarKinds: return "MixedScalarKinds";
    case ErrorCode::MixedPrecision: return "MixedPrecision";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::AllZeroVectors: return "AllZeroVectors";
    case ErrorCode::BadPolicy: return "BadPolicy";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IndexOutOfBounds: return "IndexOutOfBounds";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::BadSplit: return "BadSplit";
    case ErrorCode::SingularCoreMinor: return "SingularCoreMinor";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::InvalidLattice: return "InvalidLattice";
    case ErrorCode::UnsupportedScalar: return "UnsupportedScalar";
    case ErrorCode::NonTerminating: return "NonTerminating";
    case ErrorCode::PoleBeforeTermination: return "PoleBeforeTermination";
    case ErrorCode::A0Zero: return "A0Zero";
    case ErrorCode::BalancingViolated: return "BalancingViolated";
    case ErrorCode::ZeroDenominatorEntry: return "ZeroDenominatorEntry";
    case ErrorCode::PoleInDenominator: return "PoleInDenominator";
    case ErrorCode::FactorizationViolated: return "FactorizationViolated";
    case ErrorCode::AntisymmetryViolated: return "AntisymmetryViolated";
    case ErrorCode::InsufficientData: return "InsufficientData";
    case ErrorCode::PoleAtNode: return "PoleAtNode";
    case ErrorCode::ZeroWeight: return "ZeroWeight";
    case ErrorCode::DuplicatePoints: return "DuplicatePoints";
    case ErrorCode::DegenerateSolution: return "DegenerateSolution";
    case ErrorCode::PoleInConstant: return "PoleInConstant";
    case ErrorCode::PoleInL: return "PoleInL";
    case ErrorCode::AntiTriangularityViolated: return "AntiTriangularityViolated";
    case ErrorCode::WrongFamily: return "WrongFamily";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

ErrorClass classify(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ZeroDenominator:
    case ErrorCode::DivisionByZero:
    case ErrorCode::SingularCoreMinor:
    case ErrorCode::PoleBeforeTermination:
    case ErrorCode::A0Zero:
    case ErrorCode::ZeroDenominatorEntry:
    case ErrorCode::PoleInDenominator:
    case ErrorCode::PoleAtNode:
    case ErrorCode::ZeroWeight:
    case ErrorCode::DuplicatePoints:
    case ErrorCode::DegenerateSolution:
    case ErrorCode::PoleInConstant:
    case ErrorCode::PoleInL:
      return ErrorClass::Degenerate;
    case ErrorCode::IoError:
    case ErrorCode::ParseError:
      return ErrorClass::Io;
    default:
      return ErrorClass::InvalidInput;
  }
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace hyperlab
