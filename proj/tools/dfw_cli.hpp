#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace dfw::cli {

enum ExitCode : int { kOk = 0, kConfigError = 1, kNumericError = 2 };

struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;
  std::string output;  // empty: primary output goes to the `out` stream
  std::map<std::string, std::string> params;
  std::uint64_t seed = 0;
};

/// Parses `dfw <command> [key=value ...] [--input P] [--out P] [--config F]
/// [--seed S]`. Keys from --config come first; command-line keys override.
/// Throws ConfigError on malformed input.
RunConfig parse_command_line(const std::vector<std::string>& args);

/// Executes one command. Errors are reported on `err`; the return value is
/// the process exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_command_line + run, with --help handling.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::vector<std::string> command_names();

/// SVG line or scatter chart of CSV columns.
struct PlotOptions {
  std::string x_column;               // default: first column
  std::vector<std::string> y_columns;  // default: every other column
  bool scatter = false;
  int width = 640;
  int height = 480;
  std::string title;
};

void write_svg_plot(std::ostream& out, std::istream& csv, const PlotOptions& options);

}  // namespace dfw::cli
