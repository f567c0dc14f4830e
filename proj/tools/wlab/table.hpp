#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace wlab::cli {

/// Empty cells print as "" in CSV and null in JSON.
using Cell = std::variant<std::monostate, bool, std::int64_t, double, std::string>;

enum class Format { csv, json };

struct Table {
  std::string command;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add(std::vector<Cell> row);
};

/// Shortest decimal with 15 significant digits; -0 prints as 0.
std::string format_double(double v);

/// RFC-4180 quoting: fields with a comma, quote or line break are quoted.
std::string csv_field(const std::string& raw);

void write(std::ostream& out, const Table& table, Format format);

}  // namespace wlab::cli
