#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "egh/ideal.hpp"

namespace egh {

/// Exit codes of the command-line front end.
enum ExitCode : int { exit_ok = 0, exit_infeasible = 1, exit_verification_failure = 2, exit_usage = 3 };

/// A Hilbert table as exchanged in files:
/// {"n": int, "d": [int], "side": "ideal"|"quotient", "hf": {"<degree>": int}}.
struct HfDocument {
  int n = 0;
  std::vector<int> d;
  HilbertTable table;
};

nlohmann::json hf_to_json(const HilbertTable& table, const std::vector<int>& d);

/// Degrees must be exactly 0..jmax. Throws parse_error otherwise.
HfDocument hf_from_json(const nlohmann::json& j);

/// Runs one command line (without the program name). Output goes to `out`,
/// warnings and usage text to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace egh
