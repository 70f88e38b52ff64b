#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "xtrend/date.hpp"
#include "xtrend/error.hpp"
#include "xtrend/ingestion.hpp"
#include "xtrend/numeric_text.hpp"
#include "xtrend/sentiment.hpp"

namespace xtrend {

// ---------------------------------------------------------------------------
// Field-level rules

/// Strips blanks, then one layer of matching surrounding quotes (double or
/// single), then blanks again.
inline std::string trim_field(std::string_view cell) {
  constexpr std::string_view kBlanks = " \t\r\n\v\f";
  auto strip = [&](std::string_view s) {
    const auto first = s.find_first_not_of(kBlanks);
    if (first == std::string_view::npos) return std::string_view{};
    const auto last = s.find_last_not_of(kBlanks);
    return s.substr(first, last - first + 1);
  };
  std::string_view s = strip(cell);
  // Peel every matched layer, not just one: `"" x ""` would otherwise need
  // two calls to settle.
  while (s.size() >= 2 && (s.front() == '"' || s.front() == '\'') && s.back() == s.front()) {
    s = strip(s.substr(1, s.size() - 2));
  }
  return std::string(s);
}

/// Empty, `null`, `na` and `nan` in any case count as missing.
inline bool is_null_marker(std::string_view trimmed) {
  if (trimmed.empty()) return true;
  std::string lower(trimmed);
  for (char& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return lower == "null" || lower == "na" || lower == "nan";
}

namespace detail {

inline bool parse_time_of_day(std::string_view s, std::size_t& pos) {
  auto hh = parse_digits(s, pos, 2, 2);
  if (!hh || *hh > 23 || !expect_char(s, pos, ':')) return false;
  auto mm = parse_digits(s, pos, 2, 2);
  if (!mm || *mm > 59 || !expect_char(s, pos, ':')) return false;
  auto ss = parse_digits(s, pos, 2, 2);
  return ss && *ss <= 60;
}

inline std::optional<Date> parse_ymd(std::string_view s, std::size_t& pos, char sep) {
  auto y = parse_digits(s, pos, 4, 4);
  if (!y || !expect_char(s, pos, sep)) return std::nullopt;
  auto m = parse_digits(s, pos, 1, 2);
  if (!m || !expect_char(s, pos, sep)) return std::nullopt;
  auto d = parse_digits(s, pos, 1, 2);
  if (!d) return std::nullopt;
  return Date::from_ymd(*y, *m, *d);
}

}  // namespace detail

/// Accepts, in order: `yyyy-mm-dd`; `yyyy-mm-dd HH:MM:SS` optionally followed
/// by one zone token; `yyyy/mm/dd`; `mm/dd/yyyy`; integer Unix seconds (UTC).
inline std::optional<Date> try_normalize_date(std::string_view raw) {
  const std::string text = trim_field(raw);
  const std::string_view s = text;
  if (s.empty()) return std::nullopt;

  {
    std::size_t pos = 0;
    if (auto date = detail::parse_ymd(s, pos, '-')) {
      if (pos == s.size()) return date;
      if (s[pos] == ' ') {
        ++pos;
        if (detail::parse_time_of_day(s, pos)) {
          if (pos == s.size()) return date;
          if (s[pos] == ' ' && pos + 1 < s.size() &&
              s.find_first_of(" \t", pos + 1) == std::string_view::npos) {
            return date;
          }
        }
      }
      return std::nullopt;
    }
  }
  {
    std::size_t pos = 0;
    auto date = detail::parse_ymd(s, pos, '/');
    if (date && pos == s.size()) return date;
  }
  {
    std::size_t pos = 0;
    auto m = detail::parse_digits(s, pos, 1, 2);
    if (m && detail::expect_char(s, pos, '/')) {
      auto d = detail::parse_digits(s, pos, 1, 2);
      if (d && detail::expect_char(s, pos, '/')) {
        auto y = detail::parse_digits(s, pos, 4, 4);
        if (y && pos == s.size()) return Date::from_ymd(*y, *m, *d);
      }
      return std::nullopt;
    }
  }
  if (std::all_of(s.begin() + (s.front() == '-' ? 1 : 0), s.end(),
                  [](char c) { return c >= '0' && c <= '9'; }) &&
      s.size() <= 13 && s != "-") {
    const auto seconds = parse_integer(s);
    if (!seconds) return std::nullopt;
    std::int64_t days = *seconds / 86400;
    if (*seconds % 86400 < 0) --days;
    return Date::from_days_since_epoch(days);
  }
  return std::nullopt;
}

inline Date normalize_date(std::string_view raw) {
  if (auto date = try_normalize_date(raw)) return *date;
  throw Error(ErrorCode::UnparseableDate, "unrecognized date '" + std::string(raw) + "'");
}

// ---------------------------------------------------------------------------
// Tweet text

class StopwordSet {
 public:
  explicit StopwordSet(std::set<std::string> words) : words_(std::move(words)) {
    if (words_.empty()) throw Error(ErrorCode::InvalidInput, "stopword set is empty");
    for (const auto& w : words_) {
      if (w.empty() || !std::all_of(w.begin(), w.end(), [](char c) { return c >= 'a' && c <= 'z'; })) {
        throw Error(ErrorCode::InvalidInput, "stopword must be lowercase alphabetic: " + w);
      }
    }
  }

  /// Standard English function-word list.
  static const StopwordSet& english() {
    static const StopwordSet set(std::set<std::string>{
        "i", "me", "my", "myself", "we", "our", "ours", "ourselves", "you", "your", "yours",
        "yourself", "yourselves", "he", "him", "his", "himself", "she", "her", "hers", "herself",
        "it", "its", "itself", "they", "them", "their", "theirs", "themselves", "what", "which",
        "who", "whom", "this", "that", "these", "those", "am", "is", "are", "was", "were", "be",
        "been", "being", "have", "has", "had", "having", "do", "does", "did", "doing", "a", "an",
        "the", "and", "but", "if", "or", "because", "as", "until", "while", "of", "at", "by",
        "for", "with", "about", "against", "between", "into", "through", "during", "before",
        "after", "above", "below", "to", "from", "up", "down", "in", "out", "on", "off", "over",
        "under", "again", "further", "then", "once", "here", "there", "when", "where", "why",
        "how", "all", "any", "both", "each", "few", "more", "most", "other", "some", "such", "no",
        "nor", "not", "only", "own", "same", "so", "than", "too", "very", "s", "t", "can",
        "will", "just", "don", "should", "now", "d", "ll", "m", "o", "re", "ve", "y", "ain",
        "aren", "couldn", "didn", "doesn", "hadn", "hasn", "haven", "isn", "ma", "mightn",
        "mustn", "needn", "shan", "shouldn", "wasn", "weren", "won", "wouldn"});
    return set;
  }

  /// One word per line, `#` comments.
  static StopwordSet load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::InvalidInput, "cannot open stopword list " + path.string());
    std::set<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
      if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      std::string word = trim_field(line);
      if (!word.empty()) words.insert(std::move(word));
    }
    return StopwordSet(std::move(words));
  }

  bool contains(std::string_view word) const { return words_.find(std::string(word)) != words_.end(); }
  const std::set<std::string>& words() const { return words_; }

 private:
  std::set<std::string> words_;
};

/// Lowercases, maps every byte outside a-z to a blank, splits, and drops
/// stopwords.
inline std::vector<std::string> normalize_tweet_text(std::string_view raw, const StopwordSet& stop) {
  std::vector<std::string> tokens;
  std::string current;
  auto flush = [&] {
    if (!current.empty() && !stop.contains(current)) tokens.push_back(current);
    current.clear();
  };
  for (char ch : raw) {
    char c = ch;
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    if (c >= 'a' && c <= 'z') {
      current.push_back(c);
    } else {
      flush();
    }
  }
  flush();
  return tokens;
}

// ---------------------------------------------------------------------------
// Clean records

enum class EventType { View, Cart, RemoveFromCart, Purchase };

inline constexpr std::string_view to_string(EventType type) {
  switch (type) {
    case EventType::View: return "view";
    case EventType::Cart: return "cart";
    case EventType::RemoveFromCart: return "remove_from_cart";
    case EventType::Purchase: return "purchase";
  }
  return "";
}

inline std::optional<EventType> parse_event_type(std::string_view s) {
  std::string lower(s);
  for (char& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  for (auto t : {EventType::View, EventType::Cart, EventType::RemoveFromCart, EventType::Purchase}) {
    if (lower == to_string(t)) return t;
  }
  return std::nullopt;
}

struct CleanStockRecord {
  std::string stock_name;
  Date record_date;
  double open_price = 0;
  double close_price = 0;
  double stock_split = 0;
  double day_change_price = 0;
  double day_change_pct = 0;

  bool operator==(const CleanStockRecord&) const = default;
};

struct CleanTweetRecord {
  Date post_date;
  std::uint64_t tweet_length = 0;
  std::uint64_t comment_count = 0;
  std::uint64_t retweet_count = 0;
  std::uint64_t like_count = 0;
  SentimentLabel sentiment = SentimentLabel::Neutral;

  bool operator==(const CleanTweetRecord&) const = default;
};

struct CleanEcommEvent {
  Date record_date;
  EventType event_type = EventType::View;
  std::string product_id;
  std::optional<std::string> category_code;
  std::optional<std::string> brand;
  double price = 0;

  bool operator==(const CleanEcommEvent&) const = default;
};

enum class DropReason {
  NullRequiredField,
  NonNumeric,
  NegativePrice,
  NegativeValue,
  NegativeCount,
  ZeroOpen,
  UnparseableDate,
  UnknownEventType,
  FieldCountMismatch,
};

inline constexpr std::string_view to_string(DropReason reason) {
  switch (reason) {
    case DropReason::NullRequiredField: return "NullRequiredField";
    case DropReason::NonNumeric: return "NonNumeric";
    case DropReason::NegativePrice: return "NegativePrice";
    case DropReason::NegativeValue: return "NegativeValue";
    case DropReason::NegativeCount: return "NegativeCount";
    case DropReason::ZeroOpen: return "ZeroOpen";
    case DropReason::UnparseableDate: return "UnparseableDate";
    case DropReason::UnknownEventType: return "UnknownEventType";
    case DropReason::FieldCountMismatch: return "FieldCountMismatch";
  }
  return "";
}

struct Dropped {
  DropReason reason;
  bool operator==(const Dropped&) const = default;
};

template <typename Record>
using Cleaned = std::variant<Record, Dropped>;

namespace detail {

inline std::optional<Dropped> require_width(const RawRow& row, const SchemaDescriptor& schema) {
  if (row.fields.size() != schema.field_count()) return Dropped{DropReason::FieldCountMismatch};
  return std::nullopt;
}

/// Parses a non-negative amount, reporting the matching drop reason.
inline std::variant<double, Dropped> parse_amount(const std::string& text, DropReason negative) {
  const auto value = parse_decimal(text);
  if (!value) return Dropped{DropReason::NonNumeric};
  if (*value < 0) return Dropped{negative};
  return *value == 0.0 ? 0.0 : *value;
}

inline std::variant<std::uint64_t, Dropped> parse_count(const std::string& text) {
  const auto value = parse_integer(text);
  if (!value) return Dropped{DropReason::NonNumeric};
  if (*value < 0) return Dropped{DropReason::NegativeCount};
  return static_cast<std::uint64_t>(*value);
}

}  // namespace detail

inline Cleaned<CleanStockRecord> clean_stock(const RawRow& row) {
  static const SchemaDescriptor schema = stock_schema();
  static const std::size_t date_i = schema.field_index("Date");
  static const std::size_t open_i = schema.field_index("Open");
  static const std::size_t close_i = schema.field_index("Close");
  static const std::size_t split_i = schema.field_index("Stock Splits");
  if (auto bad = detail::require_width(row, schema)) return *bad;

  const std::string ticker = trim_field(row.fields[0]);
  const std::string date = trim_field(row.fields[date_i]);
  const std::string open = trim_field(row.fields[open_i]);
  const std::string close = trim_field(row.fields[close_i]);
  const std::string split = trim_field(row.fields[split_i]);
  for (const auto* cell : {&ticker, &date, &open, &close, &split}) {
    if (is_null_marker(*cell)) return Dropped{DropReason::NullRequiredField};
  }

  CleanStockRecord rec;
  rec.stock_name = ticker;
  const auto parsed_date = try_normalize_date(date);
  if (!parsed_date) return Dropped{DropReason::UnparseableDate};
  rec.record_date = *parsed_date;

  const auto o = detail::parse_amount(open, DropReason::NegativePrice);
  if (auto* d = std::get_if<Dropped>(&o)) return *d;
  const auto c = detail::parse_amount(close, DropReason::NegativePrice);
  if (auto* d = std::get_if<Dropped>(&c)) return *d;
  const auto s = detail::parse_amount(split, DropReason::NegativeValue);
  if (auto* d = std::get_if<Dropped>(&s)) return *d;
  rec.open_price = std::get<double>(o);
  rec.close_price = std::get<double>(c);
  rec.stock_split = std::get<double>(s);
  if (rec.open_price == 0.0) return Dropped{DropReason::ZeroOpen};

  rec.day_change_price = rec.close_price - rec.open_price;
  rec.day_change_pct = 100.0 * rec.day_change_price / rec.open_price;
  return rec;
}

inline Cleaned<CleanTweetRecord> clean_tweet(const RawRow& row, const StopwordSet& stop,
                                             const PolarityLexicon& lexicon = PolarityLexicon::builtin()) {
  static const SchemaDescriptor schema = tweet_schema();
  static const std::size_t date_i = schema.field_index("post_date");
  static const std::size_t body_i = schema.field_index("body");
  static const std::size_t comment_i = schema.field_index("comment_num");
  static const std::size_t retweet_i = schema.field_index("retweet_num");
  static const std::size_t like_i = schema.field_index("like_num");
  if (auto bad = detail::require_width(row, schema)) return *bad;

  const std::string date = trim_field(row.fields[date_i]);
  const std::string comments = trim_field(row.fields[comment_i]);
  const std::string retweets = trim_field(row.fields[retweet_i]);
  const std::string likes = trim_field(row.fields[like_i]);
  for (const auto* cell : {&date, &comments, &retweets, &likes}) {
    if (is_null_marker(*cell)) return Dropped{DropReason::NullRequiredField};
  }

  CleanTweetRecord rec;
  const auto parsed_date = try_normalize_date(date);
  if (!parsed_date) return Dropped{DropReason::UnparseableDate};
  rec.post_date = *parsed_date;

  std::uint64_t* targets[] = {&rec.comment_count, &rec.retweet_count, &rec.like_count};
  const std::string* cells[] = {&comments, &retweets, &likes};
  for (int i = 0; i < 3; ++i) {
    const auto n = detail::parse_count(*cells[i]);
    if (auto* d = std::get_if<Dropped>(&n)) return *d;
    *targets[i] = std::get<std::uint64_t>(n);
  }

  const auto tokens = normalize_tweet_text(trim_field(row.fields[body_i]), stop);
  std::uint64_t length = 0;
  for (const auto& t : tokens) length += t.size();
  if (!tokens.empty()) length += tokens.size() - 1;
  rec.tweet_length = length;
  rec.sentiment = classify_sentiment(score_polarity(tokens, lexicon));
  return rec;
}

inline Cleaned<CleanEcommEvent> clean_ecomm(const RawRow& row) {
  static const SchemaDescriptor schema = ecommerce_schema();
  static const std::size_t time_i = schema.field_index("event_time");
  static const std::size_t type_i = schema.field_index("event_type");
  static const std::size_t product_i = schema.field_index("product_id");
  static const std::size_t category_i = schema.field_index("category_code");
  static const std::size_t brand_i = schema.field_index("brand");
  static const std::size_t price_i = schema.field_index("price");
  if (auto bad = detail::require_width(row, schema)) return *bad;

  const std::string time = trim_field(row.fields[time_i]);
  const std::string type = trim_field(row.fields[type_i]);
  const std::string product = trim_field(row.fields[product_i]);
  const std::string price = trim_field(row.fields[price_i]);
  for (const auto* cell : {&time, &type, &product, &price}) {
    if (is_null_marker(*cell)) return Dropped{DropReason::NullRequiredField};
  }

  CleanEcommEvent ev;
  const auto event_type = parse_event_type(type);
  if (!event_type) return Dropped{DropReason::UnknownEventType};
  ev.event_type = *event_type;
  const auto parsed_date = try_normalize_date(time);
  if (!parsed_date) return Dropped{DropReason::UnparseableDate};
  ev.record_date = *parsed_date;
  const auto p = detail::parse_amount(price, DropReason::NegativePrice);
  if (auto* d = std::get_if<Dropped>(&p)) return *d;
  ev.price = std::get<double>(p);
  ev.product_id = product;

  std::string category = trim_field(row.fields[category_i]);
  if (!is_null_marker(category)) ev.category_code = std::move(category);
  std::string brand = trim_field(row.fields[brand_i]);
  if (!is_null_marker(brand)) {
    for (char& c : brand) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    ev.brand = std::move(brand);
  }
  return ev;
}

// ---------------------------------------------------------------------------
// Cleaned CSV files

inline constexpr std::string_view kStockCleanHeader =
    "stockName,recordDate,openPrice,closePrice,stockSplit,dayChangePrice,dayChangePercentage";
inline constexpr std::string_view kTweetCleanHeader =
    "Post_date,Tweet length,Comment_num,Retweet_num,Like_num,Sentiment";
inline constexpr std::string_view kEcommCleanHeader =
    "record date,event type,product id,category code,brand,price";

inline std::string_view clean_header(DatasetKind kind) {
  switch (kind) {
    case DatasetKind::Stocks: return kStockCleanHeader;
    case DatasetKind::Tweets: return kTweetCleanHeader;
    case DatasetKind::Ecommerce: return kEcommCleanHeader;
  }
  return "";
}

inline std::string to_csv_line(const CleanStockRecord& r) {
  return quote_csv_value(r.stock_name) + ',' + r.record_date.to_string() + ',' +
         format_shortest(r.open_price) + ',' + format_shortest(r.close_price) + ',' +
         format_shortest(r.stock_split) + ',' + format_shortest(r.day_change_price) + ',' +
         format_shortest(r.day_change_pct);
}

inline std::string to_csv_line(const CleanTweetRecord& r) {
  return r.post_date.to_string() + ',' + std::to_string(r.tweet_length) + ',' +
         std::to_string(r.comment_count) + ',' + std::to_string(r.retweet_count) + ',' +
         std::to_string(r.like_count) + ',' + std::string(to_string(r.sentiment));
}

inline std::string to_csv_line(const CleanEcommEvent& e) {
  return e.record_date.to_string() + ',' + std::string(to_string(e.event_type)) + ',' +
         quote_csv_value(e.product_id) + ',' + quote_csv_value(e.category_code.value_or("")) + ',' +
         quote_csv_value(e.brand.value_or("")) + ',' + format_shortest(e.price);
}

namespace detail {

[[noreturn]] inline void bad_clean_line(std::string_view line) {
  throw Error(ErrorCode::InvalidInput, "malformed cleaned line: " + std::string(line));
}

inline std::vector<std::string> split_trimmed(std::string_view line, std::size_t width) {
  auto cells = split_csv_line(line);
  if (cells.size() != width) bad_clean_line(line);
  for (auto& c : cells) c = trim_field(c);
  return cells;
}

inline double need_decimal(const std::string& s, std::string_view line) {
  auto v = parse_decimal(s);
  if (!v) bad_clean_line(line);
  return *v;
}

inline std::uint64_t need_count(const std::string& s, std::string_view line) {
  auto v = parse_integer(s);
  if (!v || *v < 0) bad_clean_line(line);
  return static_cast<std::uint64_t>(*v);
}

inline Date need_date(const std::string& s, std::string_view line) {
  auto d = Date::parse_iso(s);
  if (!d) bad_clean_line(line);
  return *d;
}

}  // namespace detail

inline CleanStockRecord parse_clean_stock(std::string_view line) {
  const auto c = detail::split_trimmed(line, 7);
  return {c[0],
          detail::need_date(c[1], line),
          detail::need_decimal(c[2], line),
          detail::need_decimal(c[3], line),
          detail::need_decimal(c[4], line),
          detail::need_decimal(c[5], line),
          detail::need_decimal(c[6], line)};
}

inline CleanTweetRecord parse_clean_tweet(std::string_view line) {
  const auto c = detail::split_trimmed(line, 6);
  const auto sentiment = parse_sentiment(c[5]);
  if (!sentiment) detail::bad_clean_line(line);
  return {detail::need_date(c[0], line), detail::need_count(c[1], line),
          detail::need_count(c[2], line), detail::need_count(c[3], line),
          detail::need_count(c[4], line), *sentiment};
}

inline CleanEcommEvent parse_clean_ecomm(std::string_view line) {
  auto c = detail::split_trimmed(line, 6);
  const auto type = parse_event_type(c[1]);
  if (!type) detail::bad_clean_line(line);
  CleanEcommEvent ev;
  ev.record_date = detail::need_date(c[0], line);
  ev.event_type = *type;
  ev.product_id = c[2];
  if (!c[3].empty()) ev.category_code = c[3];
  if (!c[4].empty()) ev.brand = c[4];
  ev.price = detail::need_decimal(c[5], line);
  return ev;
}

/// Reads a cleaned CSV written by the clean job, checking its header.
template <typename Parse>
auto load_clean_file(const std::filesystem::path& path, std::string_view header, Parse parse) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open cleaned file " + path.string());
  std::string line;
  if (!std::getline(in, line) || line != header) {
    throw Error(ErrorCode::InvalidInput, "unexpected header in " + path.string());
  }
  std::vector<decltype(parse(std::string_view{}))> records;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    records.push_back(parse(line));
  }
  return records;
}

inline std::vector<CleanStockRecord> load_clean_stocks(const std::filesystem::path& path) {
  return load_clean_file(path, kStockCleanHeader, parse_clean_stock);
}
inline std::vector<CleanTweetRecord> load_clean_tweets(const std::filesystem::path& path) {
  return load_clean_file(path, kTweetCleanHeader, parse_clean_tweet);
}
inline std::vector<CleanEcommEvent> load_clean_ecomm(const std::filesystem::path& path) {
  return load_clean_file(path, kEcommCleanHeader, parse_clean_ecomm);
}

}  // namespace xtrend
