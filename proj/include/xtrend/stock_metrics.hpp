#pragma once

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "xtrend/cleaning.hpp"
#include "xtrend/date.hpp"
#include "xtrend/error.hpp"

namespace xtrend {

/// Ordered so that BigLoser < Modest < BigWinner.
enum class MoveClass { BigLoser = -1, Modest = 0, BigWinner = 1 };

inline constexpr double kDefaultBigMoveThresholdPct = 5.0;

/// Strict on both sides: a move of exactly the threshold is Modest.
inline MoveClass classify_move(double day_change_pct, double threshold_pct = kDefaultBigMoveThresholdPct) {
  if (!(threshold_pct > 0)) throw Error(ErrorCode::Config, "threshold must be positive");
  if (day_change_pct > threshold_pct) return MoveClass::BigWinner;
  if (day_change_pct < -threshold_pct) return MoveClass::BigLoser;
  return MoveClass::Modest;
}

/// The tickers treated as the "top" cohort.
class TopList {
 public:
  explicit TopList(std::set<std::string> tickers) : tickers_(std::move(tickers)) {
    if (tickers_.empty()) throw Error(ErrorCode::Config, "top list is empty");
    for (const auto& t : tickers_) {
      if (std::any_of(t.begin(), t.end(), [](unsigned char c) { return std::islower(c); })) {
        throw Error(ErrorCode::Config, "top-list ticker must be uppercase: " + t);
      }
    }
  }

  /// One ticker per line, `#` comments; tickers are uppercased on load.
  static TopList load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Config, "cannot open top list " + path.string());
    std::set<std::string> tickers;
    std::string line;
    while (std::getline(in, line)) {
      if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      std::string t = trim_field(line);
      for (char& c : t) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      if (!t.empty()) tickers.insert(std::move(t));
    }
    return TopList(std::move(tickers));
  }

  bool contains(const std::string& ticker) const { return tickers_.count(ticker) > 0; }
  const std::set<std::string>& tickers() const { return tickers_; }

 private:
  std::set<std::string> tickers_;
};

/// Splits records into (members of `top`, everyone else), keeping order.
inline std::pair<std::vector<CleanStockRecord>, std::vector<CleanStockRecord>> split_top(
    const std::vector<CleanStockRecord>& records, const TopList& top) {
  std::pair<std::vector<CleanStockRecord>, std::vector<CleanStockRecord>> out;
  for (const auto& r : records) (top.contains(r.stock_name) ? out.first : out.second).push_back(r);
  return out;
}

enum class Cohort { Top, Rest, All };

inline constexpr std::string_view to_string(Cohort c) {
  switch (c) {
    case Cohort::Top: return "top";
    case Cohort::Rest: return "rest";
    case Cohort::All: return "all";
  }
  return "";
}

inline std::optional<Cohort> parse_cohort(std::string_view s) {
  for (auto c : {Cohort::Top, Cohort::Rest, Cohort::All}) {
    if (s == to_string(c)) return c;
  }
  return std::nullopt;
}

struct MarketDaySummary {
  Date date;
  Cohort cohort = Cohort::All;
  std::uint64_t advancing = 0;
  std::uint64_t declining = 0;
  std::uint64_t unchanged = 0;
  std::uint64_t big_winners = 0;
  std::uint64_t big_losers = 0;
  double pct_advancing = 0;

  std::uint64_t total() const { return advancing + declining + unchanged; }
  double pct_declining() const {
    return total() ? 100.0 * static_cast<double>(declining) / static_cast<double>(total()) : 0.0;
  }
  bool operator==(const MarketDaySummary&) const = default;
};

/// Breadth counts for one date. All records must carry that date.
inline MarketDaySummary daily_market_summary(const std::vector<CleanStockRecord>& records, Cohort cohort,
                                             double threshold_pct = kDefaultBigMoveThresholdPct) {
  if (records.empty()) throw Error(ErrorCode::EmptyDay, "no records for the day");
  MarketDaySummary s;
  s.date = records.front().record_date;
  s.cohort = cohort;
  for (const auto& r : records) {
    if (r.record_date != s.date) throw Error(ErrorCode::InvalidInput, "records span several dates");
    if (r.day_change_pct > 0) ++s.advancing;
    else if (r.day_change_pct < 0) ++s.declining;
    else ++s.unchanged;
    switch (classify_move(r.day_change_pct, threshold_pct)) {
      case MoveClass::BigWinner: ++s.big_winners; break;
      case MoveClass::BigLoser: ++s.big_losers; break;
      case MoveClass::Modest: break;
    }
  }
  s.pct_advancing = 100.0 * static_cast<double>(s.advancing) / static_cast<double>(s.total());
  return s;
}

/// One summary per date that has at least one record in the cohort, ordered
/// by date.
inline std::vector<MarketDaySummary> summarize_by_date(const std::vector<CleanStockRecord>& records,
                                                       Cohort cohort,
                                                       double threshold_pct = kDefaultBigMoveThresholdPct) {
  std::map<Date, std::vector<CleanStockRecord>> by_date;
  for (const auto& r : records) by_date[r.record_date].push_back(r);
  std::vector<MarketDaySummary> out;
  out.reserve(by_date.size());
  for (const auto& [date, day] : by_date) out.push_back(daily_market_summary(day, cohort, threshold_pct));
  return out;
}

/// Records of the requested cohort. Top and Rest need a top list.
inline std::vector<CleanStockRecord> select_cohort(const std::vector<CleanStockRecord>& records, Cohort cohort,
                                                   const TopList* top) {
  if (cohort == Cohort::All) return records;
  if (!top) throw Error(ErrorCode::Config, "cohort '" + std::string(to_string(cohort)) + "' needs a top list");
  auto [top_records, rest] = split_top(records, *top);
  return cohort == Cohort::Top ? top_records : rest;
}

}  // namespace xtrend
