#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

namespace frobcoh::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Exit codes shared by every subcommand.
enum ExitCode : int { kOk = 0, kMathFailure = 1, kInputError = 2 };

/// The value both output modes are rendered from.
struct Report {
  std::string command;
  std::string algebra;  // algebra id, empty for commands without one
  std::string field;
  nlohmann::json results = nlohmann::json::object();
  std::string version = kVersion;

  nlohmann::json to_json() const;
};

/// Aligned two-column table: one row per leaf of `results`, keyed by its
/// dotted path.
std::string render_table(const Report& report);

/// Parses argv, runs the subcommand and writes the report (table or JSON)
/// to `out`; usage errors go to `err`. Returns an ExitCode.
int run_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace frobcoh::cli
