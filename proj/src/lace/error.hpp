#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

namespace lace {

enum class ErrorCode {
  invalid_argument,
  parse_error,
  out_of_range,
  limit_exceeded,
  budget_exceeded,
  axiom_violation,
  not_a_lace,
  mixed_parity,
  negative_weight,
  direction_mismatch,
  internal,
};

/// Stable machine-readable name ("limit_exceeded", ...).
const char* error_code_name(ErrorCode code);

/// The one exception type thrown by the core. `detail` carries structured
/// context (witnesses, parity histograms) for the JSON error object.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message, nlohmann::ordered_json detail = {})
      : std::runtime_error(message), code_(code), detail_(std::move(detail)) {}

  ErrorCode code() const { return code_; }
  const nlohmann::ordered_json& detail() const { return detail_; }

private:
  ErrorCode code_;
  nlohmann::ordered_json detail_;
};

}  // namespace lace
