#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nsg {

/// Every failure the library reports carries one of these codes so callers
/// (the CLI in particular) can map them onto exit codes and messages.
enum class ErrorCode {
  EmptyInput,
  NonPositiveGenerator,
  GcdNotOne,
  TrivialSemigroup,
  WindowTooLarge,
  Overflow,
  AmbientMismatch,
  NotAnIdeal,
  GcdViolation,
  LambdaIsGenerator,
  MuIsGenerator,
  LambdaNotMember,
  MuNotMember,
  ScaledSetsIntersect,
  NonMinimalGluing,
  NonMinimalLift,
  InvalidLiftFactor,
  NonMinimalSequence,
  InvalidArgument,
  EmbeddingDimensionTooSmall,
  VariableMismatch,
  InternalInconsistency,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace nsg
