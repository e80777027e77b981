#pragma once

// Minimal CSV helpers: one record per line, RFC 4180 quoting, no embedded
// newlines.

#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace relgap::csv {

std::string escape(std::string_view field);
std::string join(const std::vector<std::string>& fields);
std::vector<std::string> split(std::string_view line, std::size_t line_no);

// Shortest decimal that reads back to the same double.
std::string format_double(double value);
double parse_double(std::string_view text, std::size_t line_no);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> line_numbers;  // source line of each row

  // Index of a header column, or nullopt.
  std::optional<std::size_t> column(std::string_view name) const;
  // Index of a header column; throws InputError naming the column.
  std::size_t require_column(std::string_view name) const;
};

// Reads a header line and data rows. Blank lines and lines starting with '#'
// are skipped. Every row must have the header's arity.
Table read(std::istream& in);
Table read_file(const std::string& path);

}  // namespace relgap::csv
