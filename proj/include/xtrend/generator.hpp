#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "xtrend/date.hpp"
#include "xtrend/engine.hpp"
#include "xtrend/ingestion.hpp"
#include "xtrend/numeric_text.hpp"
#include "xtrend/random.hpp"
#include "xtrend/report.hpp"
#include "xtrend/sentiment.hpp"

namespace xtrend::gen {

enum class Planted { Lag1TweetsWinners, WeekendBoost, ProportionalPurchases };

inline constexpr std::string_view to_string(Planted p) {
  switch (p) {
    case Planted::Lag1TweetsWinners: return "lag1_tweets_winners";
    case Planted::WeekendBoost: return "weekend_boost";
    case Planted::ProportionalPurchases: return "proportional_purchases";
  }
  return "";
}

inline std::optional<Planted> parse_planted(std::string_view s) {
  for (auto p : {Planted::Lag1TweetsWinners, Planted::WeekendBoost, Planted::ProportionalPurchases}) {
    if (s == to_string(p)) return p;
  }
  return std::nullopt;
}

struct GeneratorConfig {
  std::uint64_t seed = 7;
  int days = 60;
  /// Scale of the tweet and e-commerce streams; actual daily counts vary
  /// around it.
  int rows_per_day = 200;
  int tickers = 40;
  int top_tickers = 10;
  std::set<Planted> planted;
  /// Relative standard deviation of the multiplicative noise on planted
  /// counts.
  double noise = 0.05;
  double weekend_factor = 1.5;
  /// Share of raw rows that get one corrupted cell.
  double dirty_rate = 0.01;
  Date start = Date::ymd(2019, 10, 1);
  /// When set, this day's events are written under the following day,
  /// leaving a hole and an inflated day.
  std::optional<Date> anomaly_missing;

  bool has(Planted p) const { return planted.count(p) > 0; }

  void validate() const {
    if (days < 14) throw Error(ErrorCode::Config, "generator needs at least 14 days");
    if (rows_per_day < 1) throw Error(ErrorCode::Config, "rows per day must be at least 1");
    if (tickers < 1 || top_tickers < 1 || top_tickers > tickers) {
      throw Error(ErrorCode::Config, "need 1 <= top tickers <= tickers");
    }
    if (!(noise >= 0) || !(weekend_factor > 0) || !(dirty_rate >= 0 && dirty_rate <= 1)) {
      throw Error(ErrorCode::Config, "noise, weekend factor or dirty rate out of range");
    }
  }
};

struct GeneratorSummary {
  std::uint64_t stock_rows = 0;
  std::uint64_t tweet_rows = 0;
  std::uint64_t ecommerce_rows = 0;
  std::uint64_t dirty_rows = 0;
  std::vector<std::string> tickers;
  std::vector<std::string> top;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::vector<std::string> make_tickers(int count, Rng& rng) {
  std::set<std::string> seen;
  std::vector<std::string> out;
  while (static_cast<int>(out.size()) < count) {
    const auto len = rng.uniform_int(3, 4);
    std::string t;
    std::string lower;
    for (int i = 0; i < len; ++i) {
      const auto k = static_cast<char>(rng.uniform_int(0, 25));
      t.push_back(static_cast<char>('A' + k));
      lower.push_back(static_cast<char>('a' + k));
    }
    // a ticker that spells a polar word would skew tweet sentiment
    if (PolarityLexicon::builtin().find(lower)) continue;
    if (seen.insert(t).second) out.push_back(t);
  }
  return out;
}

template <typename T>
void shuffle(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(i) - 1));
    std::swap(v[i - 1], v[j]);
  }
}

inline std::int64_t noisy_count(double expected, double noise, Rng& rng) {
  const double v = expected * (1.0 + noise * rng.normal());
  return std::max<std::int64_t>(0, static_cast<std::int64_t>(std::llround(v)));
}

inline double round_cents(double v) { return std::round(v * 100.0) / 100.0; }

inline std::string two_digits(int v) {
  return std::string(1, static_cast<char>('0' + v / 10)) + static_cast<char>('0' + v % 10);
}

/// Corrupts one cell of a raw row so that cleaning must drop it.
inline void corrupt(std::vector<std::string>& cells, const std::vector<std::size_t>& required,
                    const std::vector<std::size_t>& numeric, std::size_t date_cell, Rng& rng) {
  switch (rng.uniform_int(0, 4)) {
    case 0: cells[required[static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(required.size()) - 1))]] = ""; break;
    case 1: cells[required[static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(required.size()) - 1))]] = "null"; break;
    case 2: cells[numeric[static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(numeric.size()) - 1))]] = "-3"; break;
    case 3: cells[numeric[static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(numeric.size()) - 1))]] = "n/a"; break;
    default: cells[date_cell] = "not-a-date"; break;
  }
}

inline std::string join_row(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out.push_back(',');
    out += cells[i];
  }
  return out;
}

// Word pools for tweet bodies. None of the filler words carries polarity in
// the built-in lexicon.
inline constexpr std::array<std::string_view, 10> kPositiveWords = {
    "great", "strong", "excellent", "bullish", "gains", "profit", "growth", "rally", "beat", "outperform"};
inline constexpr std::array<std::string_view, 10> kNegativeWords = {
    "bad", "weak", "loss", "bearish", "crash", "decline", "drop", "fear", "terrible", "selloff"};
inline constexpr std::array<std::string_view, 14> kFillerWords = {
    "stock", "shares", "market", "today", "company", "quarter", "report", "price",
    "chart", "watch", "trade", "investors", "analyst", "week"};

struct Category {
  std::string_view code;
  double weight;
  std::array<std::string_view, 3> brands;
  double price_lo, price_hi;
};

inline constexpr std::array<Category, 9> kCategories = {{
    {"electronics.smartphone", 0.30, {"Samsung", "Apple", "xiaomi"}, 90, 1200},
    {"apparel.shoes", 0.14, {"Nike", "adidas", "Puma"}, 20, 180},
    {"appliances.kitchen.washer", 0.12, {"LG", "bosch", "Samsung"}, 150, 900},
    {"electronics.video.tv", 0.10, {"Samsung", "LG", "sony"}, 200, 2500},
    {"computers.notebook", 0.09, {"Lenovo", "HP", "asus"}, 300, 2200},
    {"electronics.audio.headphone", 0.08, {"Sony", "JBL", "apple"}, 15, 400},
    {"furniture.living_room.sofa", 0.06, {"IKEA", "brw", "Halmar"}, 120, 1500},
    {"appliances.environment.vacuum", 0.06, {"Dyson", "Philips", "bosch"}, 60, 700},
    {"", 0.05, {"", "", ""}, 5, 100},
}};

inline const Category& pick_category(Rng& rng) {
  double u = rng.uniform01();
  for (const auto& c : kCategories) {
    if (u < c.weight) return c;
    u -= c.weight;
  }
  return kCategories.back();
}

}  // namespace detail

/// Writes raw stocks/, tweets/ and ecommerce/ directories plus top_list.txt
/// and generator.meta.json under `out_dir`. Output depends only on `cfg`.
inline GeneratorSummary generate(const GeneratorConfig& cfg, const std::filesystem::path& out_dir) {
  cfg.validate();
  namespace fs = std::filesystem;
  GeneratorSummary summary;

  Rng latent(detail::splitmix64(cfg.seed ^ 0x1111));
  Rng stock_rng(detail::splitmix64(cfg.seed ^ 0x2222));
  Rng tweet_rng(detail::splitmix64(cfg.seed ^ 0x3333));
  Rng ecomm_rng(detail::splitmix64(cfg.seed ^ 0x4444));
  Rng dirt_rng(detail::splitmix64(cfg.seed ^ 0x5555));

  const auto n_days = static_cast<std::size_t>(cfg.days);
  // Day index 0 is the day before `start`, so every generated day has a
  // predecessor.
  std::vector<double> intensity(n_days + 1);
  std::vector<double> mood(n_days + 1);
  for (std::size_t i = 0; i <= n_days; ++i) {
    intensity[i] = latent.uniform(0.15, 1.0);
    mood[i] = latent.uniform(0.2, 0.8);
  }
  auto date_of = [&](std::size_t i) { return cfg.start + static_cast<std::int64_t>(i) - 1; };

  auto dirty = [&] { return cfg.dirty_rate > 0 && dirt_rng.bernoulli(cfg.dirty_rate); };

  // ---- stocks -------------------------------------------------------------
  summary.tickers = detail::make_tickers(cfg.tickers, stock_rng);
  summary.top.assign(summary.tickers.begin(), summary.tickers.begin() + cfg.top_tickers);
  const auto n_tickers = summary.tickers.size();

  std::vector<double> level(n_tickers);
  for (auto& l : level) l = stock_rng.uniform(20.0, 500.0);
  std::vector<std::vector<std::string>> stock_lines(n_tickers);
  std::vector<double> advancing_frac(n_days + 1, -1.0);  // -1: market closed

  for (std::size_t i = 1; i <= n_days; ++i) {
    const Date d = date_of(i);
    if (is_weekend(d.weekday())) continue;
    std::int64_t winners = 0;
    if (cfg.has(Planted::Lag1TweetsWinners)) {
      winners = std::llround(0.4 * static_cast<double>(n_tickers) * intensity[i - 1]);
    } else {
      winners = std::llround(0.4 * static_cast<double>(n_tickers) * stock_rng.uniform(0.15, 1.0));
    }
    winners = std::clamp<std::int64_t>(winners, 0, static_cast<std::int64_t>(n_tickers));
    const auto losers = std::min<std::int64_t>(static_cast<std::int64_t>(n_tickers) - winners,
                                               std::llround(0.1 * static_cast<double>(n_tickers) * stock_rng.uniform01()));
    std::vector<std::size_t> order(n_tickers);
    for (std::size_t k = 0; k < n_tickers; ++k) order[k] = k;
    detail::shuffle(order, stock_rng);

    std::uint64_t advancing = 0;
    for (std::size_t rank = 0; rank < n_tickers; ++rank) {
      const std::size_t k = order[rank];
      double pct = 0;
      if (static_cast<std::int64_t>(rank) < winners) pct = stock_rng.uniform(5.5, 12.0);
      else if (static_cast<std::int64_t>(rank) < winners + losers) pct = stock_rng.uniform(-12.0, -5.5);
      else if (stock_rng.bernoulli(0.02)) pct = 0;
      else if (stock_rng.bernoulli(mood[i])) pct = stock_rng.uniform(0.1, 4.5);
      else pct = stock_rng.uniform(-4.5, -0.1);

      const double open = std::max(5.0, detail::round_cents(level[k]));
      const double close = pct == 0 ? open : detail::round_cents(open * (1 + pct / 100));
      if (close > open) ++advancing;
      const double high = detail::round_cents(std::max(open, close) * (1 + stock_rng.uniform(0, 0.01)));
      const double low = detail::round_cents(std::min(open, close) * (1 - stock_rng.uniform(0, 0.01)));
      level[k] = std::max(5.0, close * (1 + 0.005 * stock_rng.normal()));

      std::vector<std::string> cells = {d.to_string(),
                                        format_fixed(open, 2),
                                        format_fixed(high, 2),
                                        format_fixed(low, 2),
                                        format_fixed(close, 2),
                                        std::to_string(stock_rng.uniform_int(100000, 5000000)),
                                        "0.0",
                                        "0.0"};
      if (dirty()) {
        detail::corrupt(cells, {0, 1, 4}, {1, 4}, 0, dirt_rng);
        ++summary.dirty_rows;
      }
      stock_lines[k].push_back(detail::join_row(cells));
    }
    advancing_frac[i] = static_cast<double>(advancing) / static_cast<double>(n_tickers);
  }

  // ---- tweets -------------------------------------------------------------
  std::vector<std::string> tweet_lines;
  std::uint64_t tweet_id = 1000000;
  const double scale = cfg.rows_per_day;
  for (std::size_t i = 1; i <= n_days; ++i) {
    const Date d = date_of(i);
    const double positive_level = cfg.has(Planted::Lag1TweetsWinners) ? intensity[i] : tweet_rng.uniform(0.15, 1.0);
    const auto positives = detail::noisy_count(0.5 * scale * positive_level, cfg.noise, tweet_rng);
    const auto negatives = std::llround(0.3 * scale * tweet_rng.uniform(0.5, 1.0));
    const auto neutrals = std::llround(0.2 * scale * tweet_rng.uniform(0.5, 1.0));

    std::vector<int> kinds;
    kinds.insert(kinds.end(), static_cast<std::size_t>(positives), 1);
    kinds.insert(kinds.end(), static_cast<std::size_t>(negatives), -1);
    kinds.insert(kinds.end(), static_cast<std::size_t>(neutrals), 0);
    detail::shuffle(kinds, tweet_rng);

    for (int kind : kinds) {
      std::string body = "$" + summary.tickers[static_cast<std::size_t>(
                                   tweet_rng.uniform_int(0, static_cast<std::int64_t>(n_tickers) - 1))];
      const auto words = tweet_rng.uniform_int(3, 8);
      for (std::int64_t w = 0; w < words; ++w) {
        body += w == 1 && tweet_rng.bernoulli(0.3) ? ", " : " ";
        if (w == 0 && kind > 0) body += detail::kPositiveWords[static_cast<std::size_t>(tweet_rng.uniform_int(0, 9))];
        else if (w == 0 && kind < 0) body += detail::kNegativeWords[static_cast<std::size_t>(tweet_rng.uniform_int(0, 9))];
        else body += detail::kFillerWords[static_cast<std::size_t>(tweet_rng.uniform_int(0, 13))];
      }
      if (tweet_rng.bernoulli(0.2)) body += " " + std::to_string(tweet_rng.uniform_int(1, 300)) + "%!!";
      const std::int64_t engagement_cap = kind < 0 ? 40 : 25;
      const auto seconds = d.days_since_epoch() * 86400 + tweet_rng.uniform_int(0, 86399);
      std::vector<std::string> cells = {std::to_string(tweet_id++),
                                        "user" + std::to_string(tweet_rng.uniform_int(1, 5000)),
                                        std::to_string(seconds),
                                        quote_csv_value(body),
                                        std::to_string(tweet_rng.uniform_int(0, engagement_cap / 4)),
                                        std::to_string(tweet_rng.uniform_int(0, engagement_cap / 2)),
                                        std::to_string(tweet_rng.uniform_int(0, engagement_cap))};
      if (dirty()) {
        detail::corrupt(cells, {2, 4, 5, 6}, {4, 5, 6}, 2, dirt_rng);
        ++summary.dirty_rows;
      }
      tweet_lines.push_back(detail::join_row(cells));
    }
  }

  // ---- e-commerce ---------------------------------------------------------
  std::vector<std::string> event_lines;
  for (std::size_t i = 1; i <= n_days; ++i) {
    const Date d = date_of(i);
    const bool weekend = is_weekend(d.weekday());
    const double boost = cfg.has(Planted::WeekendBoost) && weekend ? cfg.weekend_factor : 1.0;

    double purchase_level = 0.08 * scale;
    if (cfg.has(Planted::ProportionalPurchases) && advancing_frac[i - 1] >= 0) {
      purchase_level *= 2.0 * advancing_frac[i - 1];
    } else if (!cfg.has(Planted::WeekendBoost)) {
      purchase_level *= ecomm_rng.uniform(0.8, 1.2);
    }
    const std::array<std::int64_t, 4> counts = {
        std::llround(0.72 * scale * ecomm_rng.uniform(0.9, 1.1)),
        detail::noisy_count(0.15 * scale * boost, cfg.noise, ecomm_rng),
        std::llround(0.05 * scale * ecomm_rng.uniform(0.8, 1.2)),
        detail::noisy_count(purchase_level * boost, cfg.noise, ecomm_rng)};
    constexpr std::array<std::string_view, 4> kTypes = {"view", "cart", "remove_from_cart", "purchase"};

    std::vector<int> kinds;
    for (std::size_t t = 0; t < 4; ++t) kinds.insert(kinds.end(), static_cast<std::size_t>(counts[t]), static_cast<int>(t));
    detail::shuffle(kinds, ecomm_rng);

    const Date written = cfg.anomaly_missing && d == *cfg.anomaly_missing ? d + 1 : d;
    for (int kind : kinds) {
      const auto& cat = detail::pick_category(ecomm_rng);
      const auto brand = cat.brands[static_cast<std::size_t>(ecomm_rng.uniform_int(0, 2))];
      const auto secs = ecomm_rng.uniform_int(0, 86399);
      const std::string time = written.to_string() + " " + detail::two_digits(static_cast<int>(secs / 3600)) + ":" +
                               detail::two_digits(static_cast<int>(secs / 60 % 60)) + ":" +
                               detail::two_digits(static_cast<int>(secs % 60)) + " UTC";
      std::vector<std::string> cells = {time,
                                        std::string(kTypes[static_cast<std::size_t>(kind)]),
                                        std::to_string(ecomm_rng.uniform_int(1000000, 1009999)),
                                        std::to_string(ecomm_rng.uniform_int(2053013550000000000LL, 2053013559999999999LL)),
                                        std::string(cat.code),
                                        std::string(brand),
                                        format_fixed(detail::round_cents(ecomm_rng.uniform(cat.price_lo, cat.price_hi)), 2),
                                        std::to_string(ecomm_rng.uniform_int(500000000, 599999999)),
                                        fnv1a64_hex(std::to_string(ecomm_rng.next_u64()))};
      if (dirty()) {
        if (dirt_rng.bernoulli(0.3)) cells[1] = "wishlist";
        else detail::corrupt(cells, {0, 1, 2, 6}, {6}, 0, dirt_rng);
        ++summary.dirty_rows;
      }
      event_lines.push_back(detail::join_row(cells));
    }
  }

  // ---- write --------------------------------------------------------------
  fs::create_directories(out_dir);
  for (std::size_t k = 0; k < n_tickers; ++k) {
    std::string content = "Date,Open,High,Low,Close,Volume,Dividends,Stock Splits\n";
    for (const auto& line : stock_lines[k]) content += line + "\n";
    summary.stock_rows += stock_lines[k].size();
    engine::write_file_atomically(out_dir / "stocks" / (summary.tickers[k] + ".csv"), content);
  }
  {
    std::string content = "tweet_id,writer,post_date,body,comment_num,retweet_num,like_num\n";
    for (const auto& line : tweet_lines) content += line + "\n";
    summary.tweet_rows = tweet_lines.size();
    engine::write_file_atomically(out_dir / "tweets" / "tweets.csv", content);
  }
  {
    std::string content =
        "event_time,event_type,product_id,category_id,category_code,brand,price,user_id,user_session\n";
    for (const auto& line : event_lines) content += line + "\n";
    summary.ecommerce_rows = event_lines.size();
    engine::write_file_atomically(out_dir / "ecommerce" / "events.csv", content);
  }
  {
    std::string content = "# top cohort\n";
    for (const auto& t : summary.top) content += t + "\n";
    engine::write_file_atomically(out_dir / "top_list.txt", content);
  }

  Json meta;
  meta["seed"] = cfg.seed;
  meta["days"] = cfg.days;
  meta["start"] = cfg.start.to_string();
  meta["rows_per_day"] = cfg.rows_per_day;
  meta["tickers"] = cfg.tickers;
  meta["top_tickers"] = cfg.top_tickers;
  Json planted = Json::array();
  for (auto p : cfg.planted) planted.push_back(std::string(to_string(p)));
  meta["planted"] = planted;
  meta["noise"] = cfg.noise;
  meta["weekend_factor"] = cfg.has(Planted::WeekendBoost) ? Json(cfg.weekend_factor) : Json(nullptr);
  meta["dirty_rate"] = cfg.dirty_rate;
  meta["anomaly_missing"] = cfg.anomaly_missing ? Json(cfg.anomaly_missing->to_string()) : Json(nullptr);
  meta["rows"] = {{"stocks", summary.stock_rows},
                  {"tweets", summary.tweet_rows},
                  {"ecommerce", summary.ecommerce_rows},
                  {"dirty", summary.dirty_rows}};
  engine::write_file_atomically(out_dir / "generator.meta.json", meta.dump(2) + "\n");
  return summary;
}

}  // namespace xtrend::gen
