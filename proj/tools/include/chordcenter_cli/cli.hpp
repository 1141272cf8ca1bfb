#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace chordcenter::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2 };

/// What one command produced. `digest` is the graph6 string of the input
/// graph (empty for enumerate); vertices inside `result` use the input's
/// labels.
struct Report {
  std::string command;
  std::string digest;
  nlohmann::json result;
  int exit_code = kPass;

  friend bool operator==(const Report&, const Report&) = default;
};

void to_json(nlohmann::json& j, const Report& r);
void from_json(const nlohmann::json& j, Report& r);

struct CommandOutput {
  Report report;
  /// Rendered text (JSON when --json was given).
  std::string out;
  /// Usage and error messages.
  std::string err;
  int exit_code = kPass;
};

/// argv excludes the program name. `in` backs the "-" input path.
CommandOutput run_command(const std::vector<std::string>& args, std::istream& in);

}  // namespace chordcenter::cli
