#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace dfw {

/// Shortest-ambiguity-free formatting at 17 significant digits; identical
/// bytes for identical doubles on every run.
std::string format_double(double value);

/// Strict full-string parse. Throws ConfigError naming `what` on failure.
double parse_double(std::string_view text, std::string_view what = "number");
long parse_long(std::string_view text, std::string_view what = "integer");

std::string_view trim(std::string_view text);
std::vector<std::string> split(std::string_view text, char separator);
std::vector<double> parse_double_list(std::string_view text, char separator = ',');

/// Numeric CSV with a header row.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  /// Index of a named column; throws ConfigError when missing.
  std::size_t column(const std::string& name) const;
  bool has_column(const std::string& name) const;
};

CsvTable read_csv(std::istream& in);
CsvTable read_csv_file(const std::string& path);

void write_csv_header(std::ostream& out, const std::vector<std::string>& header);
void write_csv_row(std::ostream& out, const std::vector<double>& row);
void write_csv(std::ostream& out, const CsvTable& table);

/// Reads `key=value` pairs, one per line or whitespace-separated; `#` starts
/// a comment. Later keys override earlier ones.
std::map<std::string, std::string> parse_key_values(std::istream& in);
std::map<std::string, std::string> parse_key_values_file(const std::string& path);
std::pair<std::string, std::string> split_key_value(std::string_view token);

}  // namespace dfw
