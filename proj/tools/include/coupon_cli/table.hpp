#pragma once

// Tabular command output and its two serializations.
//
// CSV:  "# schema=coupon-poisson/1 key=value ...", a header line, then rows.
// JSON: {"meta": {...}, "rows": [{column: value, ...}, ...]}.
// Doubles are written with 17 significant digits so both forms parse back
// to the same binary value.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace coupon::cli {

inline constexpr const char* kSchema = "coupon-poisson/1";

using Cell = std::variant<std::int64_t, double, std::string>;

struct Table {
  std::vector<std::pair<std::string, std::string>> meta;  // schema is implicit
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_meta(std::string key, std::string value) { meta.emplace_back(std::move(key), std::move(value)); }
};

std::string format_double(double x);
std::string format_cell(const Cell& cell);

void write_csv(std::ostream& out, const Table& table);
void write_json(std::ostream& out, const Table& table);

/// Raw CSV contents: meta values and cells as strings.
struct ParsedCsv {
  std::map<std::string, std::string> meta;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

/// Throws std::runtime_error on a missing or foreign schema line.
ParsedCsv parse_csv(const std::string& text);

}  // namespace coupon::cli
