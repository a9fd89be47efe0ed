#include "circles/error.hpp"

namespace circles {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotDisjoint: return "NOT_DISJOINT";
    case ErrorCode::DuplicatePoint: return "DUPLICATE_POINT";
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::LabelError: return "LABEL_ERROR";
    case ErrorCode::SizeMismatch: return "SIZE_MISMATCH";
    case ErrorCode::StrandMismatch: return "STRAND_MISMATCH";
    case ErrorCode::PartitionMismatch: return "PARTITION_MISMATCH";
    case ErrorCode::ShapeMismatch: return "SHAPE_MISMATCH";
    case ErrorCode::InvalidPath: return "INVALID_PATH";
    case ErrorCode::NonGeneric: return "NON_GENERIC";
    case ErrorCode::NotALoop: return "NOT_A_LOOP";
    case ErrorCode::BasepointMismatch: return "BASEPOINT_MISMATCH";
    case ErrorCode::DifferentComponent: return "DIFFERENT_COMPONENT";
    case ErrorCode::TypeMismatch: return "TYPE_MISMATCH";
    case ErrorCode::NotIsomorphic: return "NOT_ISOMORPHIC";
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
  }
  return "UNKNOWN";
}

}  // namespace circles
