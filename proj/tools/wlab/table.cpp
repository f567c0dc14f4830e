#include "table.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include <fmt/core.h>
#include <json.hpp>

namespace wlab::cli {

void Table::add(std::vector<Cell> row) {
  if (row.size() != columns.size()) throw std::logic_error("row width does not match the header");
  rows.push_back(std::move(row));
}

std::string format_double(double v) {
  if (v == 0.0) return "0";
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return fmt::format("{:.15g}", v);
}

std::string csv_field(const std::string& raw) {
  if (raw.find_first_of(",\"\r\n") == std::string::npos) return raw;
  std::string out = "\"";
  for (char c : raw) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

namespace {

struct CsvText {
  std::string operator()(std::monostate) const { return {}; }
  std::string operator()(bool b) const { return b ? "true" : "false"; }
  std::string operator()(std::int64_t i) const { return std::to_string(i); }
  std::string operator()(double d) const { return format_double(d); }
  std::string operator()(const std::string& s) const { return csv_field(s); }
};

struct JsonValue {
  nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
  nlohmann::ordered_json operator()(bool b) const { return b; }
  nlohmann::ordered_json operator()(std::int64_t i) const { return i; }
  nlohmann::ordered_json operator()(double d) const {
    if (!std::isfinite(d)) return nullptr;
    // Round-trip through the 15-digit text so JSON and CSV carry the same value.
    return std::stod(format_double(d));
  }
  nlohmann::ordered_json operator()(const std::string& s) const { return s; }
};

}  // namespace

void write(std::ostream& out, const Table& table, Format format) {
  if (format == Format::csv) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      out << (c ? "," : "") << csv_field(table.columns[c]);
    }
    out << '\n';
    for (const auto& row : table.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        out << (c ? "," : "") << std::visit(CsvText{}, row[c]);
      }
      out << '\n';
    }
    return;
  }
  nlohmann::ordered_json doc;
  doc["schema_version"] = "1";
  doc["command"] = table.command;
  auto records = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json rec = nlohmann::ordered_json::object();
    for (std::size_t c = 0; c < row.size(); ++c) rec[table.columns[c]] = std::visit(JsonValue{}, row[c]);
    records.push_back(std::move(rec));
  }
  doc["records"] = std::move(records);
  out << doc.dump(2) << '\n';
}

}  // namespace wlab::cli
