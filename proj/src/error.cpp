#include "mm/error.hpp"

namespace mm {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInput: return "INPUT_ERROR";
    case ErrorCode::kSyntax: return "SYNTAX_ERROR";
    case ErrorCode::kHomogeneity: return "NOT_HOMOGENEOUS";
    case ErrorCode::kJNotMPrimary: return "J_NOT_M_PRIMARY";
    case ErrorCode::kINilpotent: return "I_NILPOTENT";
    case ErrorCode::kStratum: return "EMPTY_STRATUM";
    case ErrorCode::kComputationLimit: return "COMPUTATION_LIMIT";
    case ErrorCode::kPrecondition: return "PRECONDITION";
    case ErrorCode::kStabilization: return "NOT_STABILIZED";
    case ErrorCode::kSearchFailure: return "SEARCH_FAILURE";
    case ErrorCode::kInternalInconsistency: return "INTERNAL_INCONSISTENCY";
    case ErrorCode::kInvariantViolation: return "INVARIANT_VIOLATION";
  }
  return "UNKNOWN";
}

}  // namespace mm
