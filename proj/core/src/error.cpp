#include "nsg/error.hpp"

namespace nsg {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::NonPositiveGenerator: return "NonPositiveGenerator";
    case ErrorCode::GcdNotOne: return "GcdNotOne";
    case ErrorCode::TrivialSemigroup: return "TrivialSemigroup";
    case ErrorCode::WindowTooLarge: return "WindowTooLarge";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::NotAnIdeal: return "NotAnIdeal";
    case ErrorCode::GcdViolation: return "GcdViolation";
    case ErrorCode::LambdaIsGenerator: return "LambdaIsGenerator";
    case ErrorCode::MuIsGenerator: return "MuIsGenerator";
    case ErrorCode::LambdaNotMember: return "LambdaNotMember";
    case ErrorCode::MuNotMember: return "MuNotMember";
    case ErrorCode::ScaledSetsIntersect: return "ScaledSetsIntersect";
    case ErrorCode::NonMinimalGluing: return "NonMinimalGluing";
    case ErrorCode::NonMinimalLift: return "NonMinimalLift";
    case ErrorCode::InvalidLiftFactor: return "InvalidLiftFactor";
    case ErrorCode::NonMinimalSequence: return "NonMinimalSequence";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::EmbeddingDimensionTooSmall: return "EmbeddingDimensionTooSmall";
    case ErrorCode::VariableMismatch: return "VariableMismatch";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

}  // namespace nsg
