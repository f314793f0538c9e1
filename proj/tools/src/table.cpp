#include "coupon_cli/table.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace coupon::cli {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_cell(const Cell& cell) {
  if (const auto* i = std::get_if<std::int64_t>(&cell)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&cell)) return format_double(*d);
  return std::get<std::string>(cell);
}

namespace {

bool needs_quotes(const std::string& s) {
  return s.empty() || s.find_first_of(",\" \n") != std::string::npos;
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// Splits on `sep` outside double quotes; "" inside quotes is a literal quote.
std::vector<std::string> split_quoted(const std::string& line, char sep) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        out.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        out.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == sep) {
      out.emplace_back();
    } else {
      out.back() += c;
    }
  }
  return out;
}

nlohmann::json to_json(const Cell& cell) {
  if (const auto* i = std::get_if<std::int64_t>(&cell)) return *i;
  if (const auto* d = std::get_if<double>(&cell)) {
    if (!std::isfinite(*d)) return format_double(*d);
    return *d;
  }
  return std::get<std::string>(cell);
}

}  // namespace

void write_csv(std::ostream& out, const Table& table) {
  out << "# schema=" << kSchema;
  for (const auto& [k, v] : table.meta) out << ' ' << k << '=' << (needs_quotes(v) ? quote(v) : v);
  out << '\n';
  for (std::size_t c = 0; c < table.columns.size(); ++c) out << (c ? "," : "") << table.columns[c];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      const std::string s = format_cell(row[c]);
      out << (c ? "," : "") << (s.find_first_of(",\"\n") != std::string::npos ? quote(s) : s);
    }
    out << '\n';
  }
}

void write_json(std::ostream& out, const Table& table) {
  nlohmann::ordered_json doc;
  doc["meta"]["schema"] = kSchema;
  for (const auto& [k, v] : table.meta) doc["meta"][k] = v;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t c = 0; c < row.size(); ++c) obj[table.columns[c]] = to_json(row[c]);
    doc["rows"].push_back(std::move(obj));
  }
  out << doc.dump(2) << '\n';
}

ParsedCsv parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line.rfind("# ", 0) != 0) throw std::runtime_error("missing schema line");
  ParsedCsv out;
  for (const auto& field : split_quoted(line.substr(2), ' ')) {
    const auto eq = field.find('=');
    if (eq == std::string::npos) continue;
    out.meta[field.substr(0, eq)] = field.substr(eq + 1);
  }
  if (out.meta["schema"] != kSchema) throw std::runtime_error("unknown schema '" + out.meta["schema"] + "'");
  if (!std::getline(in, line)) throw std::runtime_error("missing header line");
  out.columns = split_quoted(line, ',');
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    out.rows.push_back(split_quoted(line, ','));
  }
  return out;
}

}  // namespace coupon::cli
