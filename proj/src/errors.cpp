#include "hnlab/errors.hpp"

namespace hnlab {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::NonCofinite: return "NonCofinite";
    case ErrorCode::NotMember: return "NotMember";
    case ErrorCode::UnsupportedMultiplicity: return "UnsupportedMultiplicity";
    case ErrorCode::NotImplementedRange: return "NotImplementedRange";
    case ErrorCode::BadMultiplicity: return "BadMultiplicity";
    case ErrorCode::InconsistentRecord: return "InconsistentRecord";
    case ErrorCode::NotInCatalogue: return "NotInCatalogue";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::LimitExceeded: return "LimitExceeded";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::VerificationMismatch: return "VerificationMismatch";
  }
  return "Unknown";
}

}  // namespace hnlab
