#pragma once

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "xtrend/cleaning.hpp"
#include "xtrend/cli.hpp"
#include "xtrend/random.hpp"

namespace testing_support {

/// A fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    static std::uint64_t counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("xtrend_" + tag + "_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& rel) const { return path_ / rel; }

 private:
  std::filesystem::path path_;
};

inline void write_text(const std::filesystem::path& p, const std::string& text) {
  std::filesystem::create_directories(p.parent_path());
  std::ofstream(p, std::ios::binary) << text;
}

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

inline CliRun run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "xtrend");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = xtrend::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

inline std::string pick(xtrend::Rng& rng, const std::vector<std::string>& options) {
  return options[static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(options.size()) - 1))];
}

/// A raw cell that may be well-formed or broken in one of the ways the
/// cleaner has to catch.
inline std::string noisy_number(xtrend::Rng& rng, double lo, double hi, bool integer) {
  switch (rng.uniform_int(0, 9)) {
    case 0: return pick(rng, {"", "null", "NULL", "NaN", "na", "  "});
    case 1: return pick(rng, {"abc", "1.2.3", "--5", "12x", "inf"});
    case 2: return integer ? "-" + std::to_string(rng.uniform_int(1, 50)) : "-" + std::to_string(rng.uniform(0.01, 10));
    case 3: return " \"" + std::to_string(integer ? static_cast<double>(rng.uniform_int(0, 99)) : rng.uniform(lo, hi)) + "\" ";
    default:
      return integer ? std::to_string(rng.uniform_int(static_cast<std::int64_t>(lo), static_cast<std::int64_t>(hi)))
                     : std::to_string(rng.uniform(lo, hi));
  }
}

inline std::string noisy_date(xtrend::Rng& rng) {
  const auto d = xtrend::Date::from_days_since_epoch(rng.uniform_int(17000, 19000));
  const auto ymd = d.to_string();
  switch (rng.uniform_int(0, 9)) {
    case 0: return pick(rng, {"", "null", "2019-13-01", "31/31/2019", "yesterday", "2019-02-30"});
    case 1: return ymd + " 12:30:00 UTC";
    case 2: return std::to_string(d.days_since_epoch() * 86400 + rng.uniform_int(0, 86399));
    case 3: return std::to_string(d.month()) + "/" + std::to_string(d.day()) + "/" + std::to_string(d.year());
    case 4: return d.to_string().replace(4, 1, "/").replace(7, 1, "/");
    default: return ymd;
  }
}

inline void maybe_break_width(xtrend::Rng& rng, std::vector<std::string>& fields) {
  if (rng.bernoulli(0.02)) {
    if (rng.bernoulli(0.5)) fields.pop_back();
    else fields.push_back("extra");
  }
}

inline xtrend::RawRow random_stock_row(xtrend::Rng& rng) {
  xtrend::RawRow row{"stocks/T.csv", 2, {}};
  row.fields = {pick(rng, {"AAPL", "MSFT", " \"ZZ\" ", "null"}),
                noisy_date(rng),
                noisy_number(rng, 0, 500, false),
                noisy_number(rng, 0, 500, false),
                noisy_number(rng, 0, 500, false),
                noisy_number(rng, 0, 500, false),
                noisy_number(rng, 0, 1e6, true),
                noisy_number(rng, 0, 1, false),
                rng.bernoulli(0.9) ? "0" : noisy_number(rng, 0, 4, false)};
  if (rng.bernoulli(0.03)) row.fields[2] = "0";
  maybe_break_width(rng, row.fields);
  return row;
}

inline xtrend::RawRow random_tweet_row(xtrend::Rng& rng) {
  static const std::vector<std::string> words = {"good", "bad",  "great", "terrible", "the", "a",   "stock",
                                                "$tsla", "100%", "!!!",  "Loss",     "WIN", "moon", "crash"};
  std::string body;
  const auto n = rng.uniform_int(0, 10);
  for (std::int64_t i = 0; i < n; ++i) body += pick(rng, words) + (rng.bernoulli(0.2) ? ", " : " ");
  xtrend::RawRow row{"tweets/t.csv", 2, {}};
  row.fields = {std::to_string(rng.uniform_int(1, 1000000)),
                "w",
                noisy_date(rng),
                rng.bernoulli(0.5) ? xtrend::quote_csv_value(body) : "\"" + body + "\"",
                noisy_number(rng, 0, 50, true),
                noisy_number(rng, 0, 50, true),
                noisy_number(rng, 0, 500, true)};
  maybe_break_width(rng, row.fields);
  return row;
}

inline xtrend::RawRow random_ecomm_row(xtrend::Rng& rng) {
  xtrend::RawRow row{"ecommerce/e.csv", 2, {}};
  row.fields = {noisy_date(rng),
                pick(rng, {"view", "cart", "remove_from_cart", "purchase", "PURCHASE", "wishlist", "", "null"}),
                rng.bernoulli(0.97) ? std::to_string(rng.uniform_int(1000, 9999)) : "",
                "2053013555631882655",
                pick(rng, {"electronics.smartphone", "", "apparel.shoes", "null"}),
                pick(rng, {"Xiaomi", "apple", "", "NA", " Samsung "}),
                noisy_number(rng, 0, 2000, false),
                "512345678",
                "abc"};
  maybe_break_width(rng, row.fields);
  return row;
}

/// Empty string when the record satisfies its type invariants, otherwise a
/// description of the first violation.
inline std::string invariant_violation(const xtrend::CleanStockRecord& r) {
  if (r.stock_name.empty()) return "empty ticker";
  if (!(r.open_price > 0) || !(r.close_price >= 0) || !(r.stock_split >= 0)) return "negative or zero price";
  if (r.day_change_price != r.close_price - r.open_price) return "day change price";
  const double pct = 100.0 * (r.close_price - r.open_price) / r.open_price;
  if (std::abs(r.day_change_pct - pct) > 1e-9 * std::max(1.0, std::abs(pct))) return "day change pct";
  if ((r.day_change_pct > 0) != (r.day_change_price > 0) || (r.day_change_pct < 0) != (r.day_change_price < 0)) {
    return "sign mismatch";
  }
  return {};
}

inline std::string invariant_violation(const xtrend::CleanTweetRecord& r) {
  using xtrend::SentimentLabel;
  if (r.sentiment != SentimentLabel::Positive && r.sentiment != SentimentLabel::Negative &&
      r.sentiment != SentimentLabel::Neutral) {
    return "bad label";
  }
  if (r.tweet_length == 0 && r.sentiment != SentimentLabel::Neutral) return "empty text with polarity";
  return {};
}

inline std::string invariant_violation(const xtrend::CleanEcommEvent& e) {
  if (!(e.price >= 0)) return "negative price";
  if (e.product_id.empty()) return "empty product";
  if (e.brand) {
    if (e.brand->empty()) return "empty brand present";
    for (char c : *e.brand) {
      if (c >= 'A' && c <= 'Z') return "brand not lowercase";
    }
  }
  if (e.category_code && e.category_code->empty()) return "empty category present";
  return {};
}

}  // namespace testing_support
