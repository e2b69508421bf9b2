#include "rell/errors.hpp"

namespace rell {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::FullDimRequired: return "FullDimRequired";
    case ErrorCode::ZeroGenerator: return "ZeroGenerator";
    case ErrorCode::GroupNotFull: return "GroupNotFull";
    case ErrorCode::PointedRequired: return "PointedRequired";
    case ErrorCode::BadLambda: return "BadLambda";
    case ErrorCode::BadRange: return "BadRange";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace rell
