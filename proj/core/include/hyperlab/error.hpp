#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperlab {

enum class ErrorCode {
  // numerics
  ZeroDenominator,
  DivisionByZero,
  MixedScalarKinds,
  MixedPrecision,
  LengthMismatch,
  AllZeroVectors,
  BadPolicy,
  ParseError,
  // linalg
  IndexOutOfBounds,
  NotSquare,
  // condensation
  BadSplit,
  SingularCoreMinor,
  TooSmall,
  // series
  InvalidLattice,
  UnsupportedScalar,
  NonTerminating,
  PoleBeforeTermination,
  A0Zero,
  BalancingViolated,
  // detformulas
  ZeroDenominatorEntry,
  PoleInDenominator,
  FactorizationViolated,
  AntisymmetryViolated,
  InsufficientData,
  // pade
  PoleAtNode,
  ZeroWeight,
  DuplicatePoints,
  DegenerateSolution,
  PoleInConstant,
  PoleInL,
  AntiTriangularityViolated,
  WrongFamily,
  // io
  IoError,
};

/// Coarse grouping used by the CLI to choose an exit code.
enum class ErrorClass {
  InvalidInput,  // contract violated by the caller
  Degenerate,    // well-formed input that hits a pole or singular minor
  Io,
};

std::string_view to_string(ErrorCode code) noexcept;
ErrorClass classify(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hyperlab
