#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>
#include <vector>

#include <json.hpp>

#include "xtrend/analytics.hpp"
#include "xtrend/engine.hpp"
#include "xtrend/ingestion.hpp"
#include "xtrend/numeric_text.hpp"

namespace xtrend {

using Json = nlohmann::ordered_json;

/// 64-bit FNV-1a, printed as 16 hex digits.
inline std::string fnv1a64_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = kHex[h & 0xF];
    h >>= 4;
  }
  return out;
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

/// Everything one analysis run produced. Tables are arrays of flat objects
/// whose keys are the columns; series are the date-keyed plot data.
struct AnalysisReport {
  std::string analysis;
  Json parameters = Json::object();
  Json inputs = Json::object();
  Json drop_counts = Json::object();
  std::string status = "ok";
  std::string reason;
  Json result = Json::object();
  Json tables = Json::object();
  std::vector<DailySeries> series;

  bool degenerate() const { return status != "ok"; }

  Json to_json() const {
    Json j;
    j["analysis"] = analysis;
    j["status"] = status;
    if (!reason.empty()) j["reason"] = reason;
    j["parameters"] = parameters;
    j["inputs"] = inputs;
    j["drop_counts"] = drop_counts;
    j["result"] = result;
    j["tables"] = tables;
    Json s = Json::object();
    for (const auto& ds : series) {
      Json points = Json::array();
      for (const auto& [date, value] : ds.points()) points.push_back(Json::array({date.to_string(), value}));
      s[ds.label()] = std::move(points);
    }
    j["series"] = std::move(s);
    return j;
  }
};

inline std::string json_cell(const Json& v) {
  if (v.is_string()) return quote_csv_value(v.get<std::string>());
  if (v.is_null()) return "";
  if (v.is_number_float()) return format_shortest(v.get<double>());
  return v.dump();
}

/// Flat CSV rendering of a table: header from the first row's keys.
inline std::string table_to_csv(const Json& rows) {
  std::string out;
  if (!rows.is_array() || rows.empty()) return out;
  std::vector<std::string> columns;
  for (const auto& [key, value] : rows.front().items()) columns.push_back(key);
  for (std::size_t i = 0; i < columns.size(); ++i) out += (i ? "," : "") + quote_csv_value(columns[i]);
  out += '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (i) out += ',';
      if (row.contains(columns[i])) out += json_cell(row[columns[i]]);
    }
    out += '\n';
  }
  return out;
}

inline std::string series_to_csv(const DailySeries& s) {
  std::string out = "date,value\n";
  for (const auto& [date, value] : s.points()) out += date.to_string() + ',' + format_shortest(value) + '\n';
  return out;
}

/// Writes `<dir>/<analysis>.report.json` plus one CSV per table and per
/// series under `<dir>/plots/`. Returns the paths written.
inline std::vector<std::filesystem::path> write_report(const AnalysisReport& report,
                                                       const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> written;
  const auto json_path = dir / (report.analysis + ".report.json");
  engine::write_file_atomically(json_path, report.to_json().dump(2) + "\n");
  written.push_back(json_path);
  for (const auto& [name, rows] : report.tables.items()) {
    if (!rows.is_array() || rows.empty()) continue;
    const auto p = dir / "plots" / (report.analysis + "__" + name + ".csv");
    engine::write_file_atomically(p, table_to_csv(rows));
    written.push_back(p);
  }
  for (const auto& s : report.series) {
    const auto p = dir / "plots" / (report.analysis + "__" + s.label() + ".csv");
    engine::write_file_atomically(p, series_to_csv(s));
    written.push_back(p);
  }
  return written;
}

}  // namespace xtrend
