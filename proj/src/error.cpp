#include "subdepth/error.hpp"

namespace subdepth {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorCode::InvalidPermutation: return "InvalidPermutation";
    case ErrorCode::UnknownConstructor: return "UnknownConstructor";
    case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::GroupMismatch: return "GroupMismatch";
    case ErrorCode::TableMismatch: return "TableMismatch";
    case ErrorCode::NotACharacter: return "NotACharacter";
    case ErrorCode::NotFaithful: return "NotFaithful";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DegenerateMatrix: return "DegenerateMatrix";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DegreeViolation: return "DegreeViolation";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::PrimeSearchFailed: return "PrimeSearchFailed";
    case ErrorCode::LiftInconsistent: return "LiftInconsistent";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::TheoremViolation: return "TheoremViolation";
  }
  return "Unknown";
}

bool is_internal(ErrorCode code) {
  switch (code) {
    case ErrorCode::PrimeSearchFailed:
    case ErrorCode::LiftInconsistent:
    case ErrorCode::CapExceeded:
    case ErrorCode::TheoremViolation:
      return true;
    default:
      return false;
  }
}

}  // namespace subdepth
