#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace egh {

enum class Errc {
  dimension_mismatch,
  invalid_input,
  invalid_degree_sequence,
  infeasible_value,
  insufficient_range,
  precondition,
  inconsistent_link,
  budget_exceeded,
  regularity_failure,
  hard_failure,
  parse_error,
};

std::string_view to_string(Errc code);

/// Library-wide exception. Structured infeasibility (EGH/LPP construction
/// failing for a table) is reported through return values instead.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace egh
