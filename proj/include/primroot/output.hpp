#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

namespace primroot::output {

inline constexpr const char* kSchemaVersion = "1.0";

/// A cell. std::monostate marks an undefined value (NA in CSV, null in JSON).
using Value = std::variant<std::monostate, bool, std::int64_t, std::uint64_t,
                           double, std::string>;
using Row = std::vector<std::pair<std::string, Value>>;

struct OutputRecord {
  std::string command;
  Row parameters;
  std::vector<Row> rows;
  Row summary;
};

/// 12 significant digits; the JSON emitter reuses this text so both formats
/// carry identical values.
inline std::string format_double(double v) {
  if (!std::isfinite(v)) return "NA";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline std::string to_text(const Value& v) {
  struct Visitor {
    std::string operator()(std::monostate) const { return "NA"; }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(std::int64_t i) const { return std::to_string(i); }
    std::string operator()(std::uint64_t u) const { return std::to_string(u); }
    std::string operator()(double d) const { return format_double(d); }
    std::string operator()(const std::string& s) const { return s; }
  };
  return std::visit(Visitor{}, v);
}

inline nlohmann::ordered_json to_json(const Value& v) {
  struct Visitor {
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(bool b) const { return b; }
    nlohmann::ordered_json operator()(std::int64_t i) const { return i; }
    nlohmann::ordered_json operator()(std::uint64_t u) const { return u; }
    nlohmann::ordered_json operator()(double d) const {
      if (!std::isfinite(d)) return nullptr;
      return std::stod(format_double(d));
    }
    nlohmann::ordered_json operator()(const std::string& s) const { return s; }
  };
  return std::visit(Visitor{}, v);
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

/// Header from the first row, then one line per row. The summary follows as
/// `# key=value` comment lines.
inline void write_csv(std::ostream& os, const OutputRecord& record) {
  if (!record.rows.empty()) {
    const Row& first = record.rows.front();
    for (std::size_t i = 0; i < first.size(); ++i) {
      os << (i ? "," : "") << csv_escape(first[i].first);
    }
    os << '\n';
    for (const Row& row : record.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        os << (i ? "," : "") << csv_escape(to_text(row[i].second));
      }
      os << '\n';
    }
  }
  for (const auto& [key, value] : record.summary) {
    os << "# " << key << '=' << to_text(value) << '\n';
  }
}

inline nlohmann::ordered_json to_json(const Row& row) {
  nlohmann::ordered_json obj = nlohmann::ordered_json::object();
  for (const auto& [key, value] : row) obj[key] = to_json(value);
  return obj;
}

inline void write_json(std::ostream& os, const OutputRecord& record) {
  nlohmann::ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = record.command;
  doc["parameters"] = to_json(record.parameters);
  doc["rows"] = nlohmann::ordered_json::array();
  for (const Row& row : record.rows) doc["rows"].push_back(to_json(row));
  doc["summary"] = to_json(record.summary);
  os << doc.dump(2) << '\n';
}

}  // namespace primroot::output
