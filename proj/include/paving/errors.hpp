#pragma once

#include <stdexcept>
#include <string>

namespace paving {

enum class ErrorCode {
  wrong_size,
  overlap_violation,
  bad_rank,
  duplicate_ch,
  out_of_range,
  not_a_circuit_hyperplane,
  not_nested,
  k_too_small,
  bad_relaxation,
  too_few_edges,
  parse_error,
  loop_edge,
  duplicate_edge,
  too_large,
  rank_mismatch,
  foreign_flat,
  duplicate_label,
  internal,
};

const char* to_string(ErrorCode code);

/// Exception carrying a typed error code; `what()` is a human-readable message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::wrong_size: return "WrongSize";
    case ErrorCode::overlap_violation: return "OverlapViolation";
    case ErrorCode::bad_rank: return "BadRank";
    case ErrorCode::duplicate_ch: return "DuplicateCH";
    case ErrorCode::out_of_range: return "OutOfRange";
    case ErrorCode::not_a_circuit_hyperplane: return "NotACircuitHyperplane";
    case ErrorCode::not_nested: return "NotNested";
    case ErrorCode::k_too_small: return "KTooSmall";
    case ErrorCode::bad_relaxation: return "BadRelaxation";
    case ErrorCode::too_few_edges: return "TooFewEdges";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::loop_edge: return "LoopEdge";
    case ErrorCode::duplicate_edge: return "DuplicateEdge";
    case ErrorCode::too_large: return "TooLarge";
    case ErrorCode::rank_mismatch: return "RankMismatch";
    case ErrorCode::foreign_flat: return "ForeignFlat";
    case ErrorCode::duplicate_label: return "DuplicateLabel";
    case ErrorCode::internal: return "InternalError";
  }
  return "UnknownError";
}

}  // namespace paving
