#include "lace/error.hpp"

namespace lace {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::parse_error: return "parse_error";
    case ErrorCode::out_of_range: return "out_of_range";
    case ErrorCode::limit_exceeded: return "limit_exceeded";
    case ErrorCode::budget_exceeded: return "budget_exceeded";
    case ErrorCode::axiom_violation: return "axiom_violation";
    case ErrorCode::not_a_lace: return "not_a_lace";
    case ErrorCode::mixed_parity: return "mixed_parity";
    case ErrorCode::negative_weight: return "negative_weight";
    case ErrorCode::direction_mismatch: return "direction_mismatch";
    case ErrorCode::internal: return "internal";
  }
  return "internal";
}

}  // namespace lace
