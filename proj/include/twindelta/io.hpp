#pragma once

// Output envelope shared by the CLI: a column table with a provenance
// block, serialized as CSV (single header row, '#'-prefixed provenance
// comments) or JSON ({schema_version, command, params, data}).  All numbers
// print with 12 significant digits through std::to_chars, so output is
// locale-independent and a JSON file re-serializes to the identical CSV.

#include <charconv>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

namespace twindelta::io {

inline constexpr const char* kSchemaVersion = "1";

using Cell = std::variant<double, std::int64_t, std::string>;

struct Table {
  std::string command;
  std::vector<std::pair<std::string, std::string>> params;  // provenance echo
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

inline std::string format_double(double x) {
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof(buf), x,
                           std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

inline std::string cell_text(const Cell& c) {
  if (std::holds_alternative<double>(c))
    return format_double(std::get<double>(c));
  if (std::holds_alternative<std::int64_t>(c))
    return std::to_string(std::get<std::int64_t>(c));
  return std::get<std::string>(c);
}

inline std::string to_csv(const Table& t) {
  std::string out;
  out += "# twindelta schema_version=";
  out += kSchemaVersion;
  out += "\n# command=" + t.command + "\n";
  for (const auto& [k, v] : t.params) out += "# " + k + "=" + v + "\n";
  for (std::size_t i = 0; i < t.columns.size(); ++i)
    out += (i ? "," : "") + t.columns[i];
  out += "\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      out += (i ? "," : "") + cell_text(row[i]);
    out += "\n";
  }
  return out;
}

inline nlohmann::json to_json(const Table& t) {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = t.command;
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [k, v] : t.params) params[k] = v;
  j["params"] = params;
  j["param_order"] = nlohmann::json::array();
  for (const auto& [k, v] : t.params) j["param_order"].push_back(k);
  j["data"]["columns"] = t.columns;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : t.rows) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& c : row) {
      if (std::holds_alternative<double>(c))
        r.push_back(std::get<double>(c));
      else if (std::holds_alternative<std::int64_t>(c))
        r.push_back(std::get<std::int64_t>(c));
      else
        r.push_back(std::get<std::string>(c));
    }
    rows.push_back(r);
  }
  j["data"]["rows"] = rows;
  return j;
}

// Rebuild the Table from its JSON form; to_csv(from_json(to_json(t)))
// reproduces to_csv(t) byte for byte.
inline Table from_json(const nlohmann::json& j) {
  Table t;
  t.command = j.at("command").get<std::string>();
  for (const auto& k : j.at("param_order"))
    t.params.emplace_back(k.get<std::string>(),
                          j.at("params").at(k.get<std::string>()).get<std::string>());
  for (const auto& c : j.at("data").at("columns"))
    t.columns.push_back(c.get<std::string>());
  for (const auto& row : j.at("data").at("rows")) {
    std::vector<Cell> r;
    for (const auto& c : row) {
      if (c.is_number_float())
        r.emplace_back(c.get<double>());
      else if (c.is_number_integer())
        r.emplace_back(c.get<std::int64_t>());
      else
        r.emplace_back(c.get<std::string>());
    }
    t.rows.push_back(std::move(r));
  }
  return t;
}

}  // namespace twindelta::io
