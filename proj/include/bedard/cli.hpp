#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace bedard::cli {

inline constexpr const char* kSchema = "bedard-pieces/1";

enum ExitCode : int { kPass = 0, kVerifyFailed = 1, kUsage = 2, kBudget = 3 };

enum class Format { json, csv, table };

struct RunConfig {
  /// e.g. {"pieces"}, {"bedard", "psi"}, {"oracle", "z-census"}
  std::vector<std::string> command;
  std::string type;
  std::string j;  // comma-separated, 0-based
  bool all_j = false;
  std::string twist = "id";
  bool all_twists = false;
  std::optional<int> torus_rank;
  std::optional<int> q;
  std::optional<int> m;
  std::optional<int> n;
  std::string w;
  std::string u;  // "1;0" for phi
  bool compare = false;
  Format format = Format::json;
  std::size_t budget = 0;
  std::size_t cap = 0;
  std::optional<std::string> out;
};

struct ParseOutcome {
  std::optional<RunConfig> config;
  int exit_code = kPass;
  std::string message;  // help text or error
};

/// Reads BEDARD_BUDGET for defaults of --budget and --cap.
ParseOutcome parse_args(const std::vector<std::string>& args);

struct Report {
  int exit_code = kPass;
  nlohmann::ordered_json json;
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
};

/// Throws bedard::Error subclasses for bad input; see exit_code_for.
Report run_command(const RunConfig& cfg);
std::string emit_report(const Report& report, Format format);
/// Exit code for an exception escaping run_command.
int exit_code_for(const std::exception& e);

/// Full front end: parse, run, write. Returns the process exit code.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bedard::cli
