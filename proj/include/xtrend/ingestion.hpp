#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "xtrend/counters.hpp"
#include "xtrend/error.hpp"

namespace xtrend {

enum class DatasetKind { Stocks, Tweets, Ecommerce };

inline constexpr std::string_view to_string(DatasetKind kind) {
  switch (kind) {
    case DatasetKind::Stocks: return "stocks";
    case DatasetKind::Tweets: return "tweets";
    case DatasetKind::Ecommerce: return "ecommerce";
  }
  return "";
}

inline std::optional<DatasetKind> parse_dataset_kind(std::string_view s) {
  for (auto kind : {DatasetKind::Stocks, DatasetKind::Tweets, DatasetKind::Ecommerce}) {
    if (s == to_string(kind)) return kind;
  }
  return std::nullopt;
}

/// One data line of a raw file. Line 1 is always the header, so data lines
/// start at 2.
struct RawRow {
  std::filesystem::path source_file;
  std::uint64_t line_number = 0;
  std::vector<std::string> fields;

  bool operator==(const RawRow&) const = default;
};

/// Column layout of a raw source file. Rows handed out by read_dataset are
/// arranged in `expected_columns` order regardless of the physical order in
/// the file; when `ticker_from_filename` is set the ticker is an extra cell
/// in front of them.
struct SchemaDescriptor {
  DatasetKind kind = DatasetKind::Stocks;
  std::vector<std::string> expected_columns;
  std::vector<std::string> required_columns;
  bool ticker_from_filename = false;

  /// Position of a column within RawRow::fields.
  std::size_t field_index(std::string_view column) const {
    for (std::size_t i = 0; i < expected_columns.size(); ++i) {
      if (expected_columns[i] == column) return i + (ticker_from_filename ? 1 : 0);
    }
    throw Error(ErrorCode::InvalidInput, "unknown column " + std::string(column));
  }

  std::size_t field_count() const {
    return expected_columns.size() + (ticker_from_filename ? 1 : 0);
  }

  void validate() const {
    if (expected_columns.empty()) throw Error(ErrorCode::Config, "schema has no columns");
    for (std::size_t i = 0; i < expected_columns.size(); ++i) {
      for (std::size_t j = i + 1; j < expected_columns.size(); ++j) {
        if (expected_columns[i] == expected_columns[j]) {
          throw Error(ErrorCode::Config, "duplicate column " + expected_columns[i]);
        }
      }
    }
    for (const auto& req : required_columns) {
      if (std::find(expected_columns.begin(), expected_columns.end(), req) ==
          expected_columns.end()) {
        throw Error(ErrorCode::Config, "required column not in schema: " + req);
      }
    }
  }
};

// Raw layouts of the public stock, stock-tweet and e-commerce event dumps.
inline SchemaDescriptor stock_schema() {
  return {DatasetKind::Stocks,
          {"Date", "Open", "High", "Low", "Close", "Volume", "Dividends", "Stock Splits"},
          {"Date", "Open", "Close", "Stock Splits"},
          true};
}

inline SchemaDescriptor tweet_schema() {
  return {DatasetKind::Tweets,
          {"tweet_id", "writer", "post_date", "body", "comment_num", "retweet_num", "like_num"},
          {"post_date", "body", "comment_num", "retweet_num", "like_num"},
          false};
}

inline SchemaDescriptor ecommerce_schema() {
  return {DatasetKind::Ecommerce,
          {"event_time", "event_type", "product_id", "category_id", "category_code", "brand",
           "price", "user_id", "user_session"},
          {"event_time", "event_type", "product_id", "category_code", "brand", "price"},
          false};
}

inline SchemaDescriptor schema_for(DatasetKind kind) {
  switch (kind) {
    case DatasetKind::Stocks: return stock_schema();
    case DatasetKind::Tweets: return tweet_schema();
    case DatasetKind::Ecommerce: return ecommerce_schema();
  }
  throw Error(ErrorCode::InvalidInput, "unknown dataset kind");
}

// ---------------------------------------------------------------------------
// CSV mechanics

/// Splits one line on commas outside double quotes. A cell is quoted when its
/// first non-blank character is `"`; inside it `""` stands for one quote and
/// the closing quote is the first lone `"` followed only by blanks up to the
/// next comma or the end of the line. Quoted cells keep their surrounding
/// quotes (and any blanks around them); only the doubling is undone.
inline std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> cells;
  std::string cell;
  std::size_t i = 0;
  const std::size_t n = line.size();

  auto is_blank = [](char c) { return c == ' ' || c == '\t'; };

  while (true) {
    cell.clear();
    std::size_t j = i;
    while (j < n && is_blank(line[j])) ++j;
    if (j < n && line[j] == '"') {
      cell.append(line.substr(i, j - i));
      cell.push_back('"');
      std::size_t k = j + 1;
      bool closed = false;
      while (k < n) {
        if (line[k] != '"') {
          cell.push_back(line[k++]);
          continue;
        }
        if (k + 1 < n && line[k + 1] == '"') {
          cell.push_back('"');
          k += 2;
          continue;
        }
        std::size_t after = k + 1;
        while (after < n && is_blank(line[after])) ++after;
        if (after == n || line[after] == ',') {
          cell.append(line.substr(k, after - k));
          closed = true;
          k = after;
          break;
        }
        cell.push_back('"');
        ++k;
      }
      if (!closed) throw Error(ErrorCode::UnterminatedQuote, "quoted cell never closes");
      cells.push_back(cell);
      if (k == n) break;
      i = k + 1;
    } else {
      const std::size_t comma = line.find(',', i);
      if (comma == std::string_view::npos) {
        cells.emplace_back(line.substr(i));
        break;
      }
      cells.emplace_back(line.substr(i, comma - i));
      i = comma + 1;
    }
  }
  return cells;
}

/// Inverse of split_csv_line for any cell list it produced.
inline std::string join_csv_cells(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (c > 0) out.push_back(',');
    const std::string& cell = cells[c];
    const std::size_t lead = cell.find_first_not_of(" \t");
    if (lead == std::string::npos || cell[lead] != '"') {
      out += cell;
      continue;
    }
    std::size_t last = cell.find_last_not_of(" \t");
    // last >= lead and cell[last] == '"' for cells produced by the splitter.
    out.append(cell, 0, lead + 1);
    for (std::size_t k = lead + 1; k < last; ++k) {
      out.push_back(cell[k]);
      if (cell[k] == '"') out.push_back('"');
    }
    out.append(cell, last, std::string::npos);
  }
  return out;
}

/// Renders a plain value as a CSV cell, quoting it when it holds a comma, a
/// quote, or leading/trailing blanks.
inline std::string quote_csv_value(std::string_view value) {
  const bool needs_quotes =
      value.find_first_of(",\"") != std::string_view::npos ||
      (!value.empty() && (value.front() == ' ' || value.front() == '\t' ||
                          value.back() == ' ' || value.back() == '\t'));
  if (!needs_quotes) return std::string(value);
  std::string out = "\"";
  for (char c : value) {
    out.push_back(c);
    if (c == '"') out.push_back('"');
  }
  out.push_back('"');
  return out;
}

/// Replaces every invalid UTF-8 sequence with U+FFFD.
inline std::string sanitize_utf8(std::string_view in) {
  static constexpr std::string_view kReplacement = "\xEF\xBF\xBD";
  std::string out;
  out.reserve(in.size());
  std::size_t i = 0;
  const auto byte = [&](std::size_t k) { return static_cast<unsigned char>(in[k]); };
  while (i < in.size()) {
    const unsigned char c = byte(i);
    if (c < 0x80) {
      out.push_back(static_cast<char>(c));
      ++i;
      continue;
    }
    std::size_t len = 0;
    std::uint32_t cp = 0;
    if (c >= 0xC2 && c <= 0xDF) {
      len = 2;
      cp = c & 0x1F;
    } else if (c >= 0xE0 && c <= 0xEF) {
      len = 3;
      cp = c & 0x0F;
    } else if (c >= 0xF0 && c <= 0xF4) {
      len = 4;
      cp = c & 0x07;
    }
    bool ok = len > 0 && i + len <= in.size();
    for (std::size_t k = 1; ok && k < len; ++k) {
      if ((byte(i + k) & 0xC0) != 0x80) ok = false;
      else cp = (cp << 6) | (byte(i + k) & 0x3F);
    }
    // Reject overlongs, surrogates, and code points past U+10FFFF.
    if (ok && ((len == 3 && (cp < 0x800 || (cp >= 0xD800 && cp <= 0xDFFF))) ||
               (len == 4 && (cp < 0x10000 || cp > 0x10FFFF)))) {
      ok = false;
    }
    if (ok) {
      out.append(in.substr(i, len));
      i += len;
    } else {
      out += kReplacement;
      ++i;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Directory reading

struct SkippedFile {
  std::filesystem::path file;
  std::string reason;
};

struct IngestResult {
  std::vector<RawRow> rows;
  /// Non-header lines across all accepted files.
  std::uint64_t total_lines = 0;
  /// Lines that could not become RawRows, by reason.
  DropCounts malformed;
  std::vector<SkippedFile> skipped_files;
};

namespace detail {

inline std::string lower_trimmed(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\"'");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\"'");
  std::string out(s.substr(first, last - first + 1));
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

inline bool has_csv_extension(const std::filesystem::path& p) {
  return lower_trimmed(p.extension().string()) == ".csv";
}

}  // namespace detail

/// Stem of the file name, uppercased: `data/aapl.us.csv` -> `AAPL.US`.
inline std::string ticker_from_path(const std::filesystem::path& file) {
  std::string stem = file.stem().string();
  for (char& c : stem) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return stem;
}

/// Lists `.csv` files of a directory in lexicographic filename order.
inline std::vector<std::filesystem::path> list_csv_files(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) {
    throw Error(ErrorCode::InvalidInput, "input directory does not exist: " + dir.string());
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && detail::has_csv_extension(entry.path())) {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end(),
            [](const fs::path& a, const fs::path& b) { return a.filename() < b.filename(); });
  return files;
}

/// Maps the header of one file onto the schema. Returns, for each expected
/// column, its position in the file or -1 when the file lacks that optional
/// column. Empty result means the header is unusable.
inline std::optional<std::vector<int>> match_header(const std::vector<std::string>& header,
                                                    const SchemaDescriptor& schema) {
  std::vector<std::string> names;
  names.reserve(header.size());
  for (const auto& h : header) names.push_back(detail::lower_trimmed(h));

  std::vector<int> positions;
  for (const auto& column : schema.expected_columns) {
    const auto want = detail::lower_trimmed(column);
    const auto it = std::find(names.begin(), names.end(), want);
    positions.push_back(it == names.end() ? -1 : static_cast<int>(it - names.begin()));
  }
  for (const auto& req : schema.required_columns) {
    if (positions[schema.field_index(req) - (schema.ticker_from_filename ? 1 : 0)] < 0) {
      return std::nullopt;
    }
  }
  return positions;
}

/// Reads every `.csv` file under `dir`. Files are visited in filename order
/// and lines in file order. Files whose header does not fit the schema are
/// skipped whole; lines that fail to split or have the wrong cell count are
/// tallied in `malformed`.
inline IngestResult read_dataset(const std::filesystem::path& dir, const SchemaDescriptor& schema) {
  schema.validate();
  IngestResult result;
  for (const auto& file : list_csv_files(dir)) {
    std::ifstream in(file, std::ios::binary);
    if (!in) {
      result.skipped_files.push_back({file, "unreadable"});
      continue;
    }
    std::string line;
    if (!std::getline(in, line)) {
      result.skipped_files.push_back({file, "MissingHeader: empty file"});
      continue;
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);

    std::optional<std::vector<int>> positions;
    std::size_t header_width = 0;
    try {
      const auto header = split_csv_line(sanitize_utf8(line));
      header_width = header.size();
      positions = match_header(header, schema);
    } catch (const Error&) {
      positions.reset();
    }
    if (!positions) {
      result.skipped_files.push_back({file, "MissingHeader"});
      continue;
    }

    const std::string ticker = schema.ticker_from_filename ? ticker_from_path(file) : "";
    std::uint64_t line_number = 1;
    while (std::getline(in, line)) {
      ++line_number;
      ++result.total_lines;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      std::vector<std::string> cells;
      try {
        cells = split_csv_line(sanitize_utf8(line));
      } catch (const Error&) {
        ++result.malformed["UnterminatedQuote"];
        continue;
      }
      if (cells.size() != header_width) {
        ++result.malformed["FieldCountMismatch"];
        continue;
      }
      RawRow row{file, line_number, {}};
      row.fields.reserve(schema.field_count());
      if (schema.ticker_from_filename) row.fields.push_back(ticker);
      for (int pos : *positions) {
        row.fields.push_back(pos < 0 ? std::string() : std::move(cells[static_cast<std::size_t>(pos)]));
      }
      result.rows.push_back(std::move(row));
    }
  }
  return result;
}

}  // namespace xtrend
