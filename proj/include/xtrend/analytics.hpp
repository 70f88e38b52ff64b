#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "xtrend/cleaning.hpp"
#include "xtrend/date.hpp"
#include "xtrend/error.hpp"
#include "xtrend/stock_metrics.hpp"

namespace xtrend {

/// Correctly rounded sum of `values` (Shewchuk's exact partials), so totals
/// do not depend on summation order.
inline double exact_sum(std::span<const double> values) {
  std::vector<double> partials;
  for (double x : values) {
    std::size_t i = 0;
    for (double y : partials) {
      if (std::abs(x) < std::abs(y)) std::swap(x, y);
      const double hi = x + y;
      const double lo = y - (hi - x);
      if (lo != 0.0) partials[i++] = lo;
      x = hi;
    }
    partials.resize(i);
    partials.push_back(x);
  }
  double hi = 0.0;
  if (!partials.empty()) {
    std::size_t n = partials.size();
    hi = partials[--n];
    double lo = 0.0;
    while (n > 0) {
      const double x = hi;
      const double y = partials[--n];
      hi = x + y;
      const double yr = hi - x;
      lo = y - yr;
      if (lo != 0.0) break;
    }
    // Half-way correction, as in CPython's math.fsum.
    if (n > 0 && ((lo < 0 && partials[n - 1] < 0) || (lo > 0 && partials[n - 1] > 0))) {
      const double y = lo * 2;
      const double x = hi + y;
      if (y == x - hi) hi = x;
    }
  }
  return hi;
}

/// Date-keyed numeric series.
class DailySeries {
 public:
  DailySeries() = default;
  explicit DailySeries(std::string label, std::map<Date, double> points = {})
      : label_(std::move(label)), points_(std::move(points)) {}

  const std::string& label() const { return label_; }
  const std::map<Date, double>& points() const { return points_; }
  std::map<Date, double>& points() { return points_; }

  bool empty() const { return points_.empty(); }
  std::size_t size() const { return points_.size(); }
  bool contains(Date d) const { return points_.count(d) > 0; }
  std::optional<double> at(Date d) const {
    const auto it = points_.find(d);
    return it == points_.end() ? std::nullopt : std::optional<double>(it->second);
  }
  void set(Date d, double v) { points_[d] = v; }

  double total() const {
    std::vector<double> values;
    values.reserve(points_.size());
    for (const auto& [d, v] : points_) values.push_back(v);
    return exact_sum(values);
  }

  bool operator==(const DailySeries&) const = default;

 private:
  std::string label_;
  std::map<Date, double> points_;
};

// ---------------------------------------------------------------------------
// Anomaly repair and rollups

/// Spreads the combined value of a missing day and the day that absorbed it
/// evenly over both. Other points are untouched.
inline DailySeries normalize_anomalous_days(const DailySeries& series, Date missing_date, Date inflated_date) {
  if (missing_date == inflated_date) throw Error(ErrorCode::InvalidInput, "anomaly dates must differ");
  const auto inflated = series.at(inflated_date);
  if (!inflated) throw Error(ErrorCode::DateNotFound, inflated_date.to_string() + " not in series");
  const double combined = series.at(missing_date).value_or(0.0) + *inflated;
  DailySeries out = series;
  out.set(missing_date, combined / 2);
  out.set(inflated_date, combined / 2);
  return out;
}

enum class Aggregate { Sum, Mean };

struct WeekdayProfile {
  std::map<Weekday, double> values;
  std::map<Weekday, std::uint64_t> counts;
};

inline WeekdayProfile rollup_weekday(const DailySeries& series, Aggregate aggregate) {
  std::map<Weekday, std::vector<double>> groups;
  for (const auto& [date, v] : series.points()) groups[date.weekday()].push_back(v);
  WeekdayProfile profile;
  for (const auto& [wd, values] : groups) {
    const double sum = exact_sum(values);
    profile.values[wd] = aggregate == Aggregate::Sum ? sum : sum / static_cast<double>(values.size());
    profile.counts[wd] = values.size();
  }
  return profile;
}

inline std::map<IsoWeek, double> rollup_weekno(const DailySeries& series) {
  std::map<IsoWeek, std::vector<double>> groups;
  for (const auto& [date, v] : series.points()) groups[date.iso_week()].push_back(v);
  std::map<IsoWeek, double> out;
  for (const auto& [week, values] : groups) out[week] = exact_sum(values);
  return out;
}

// ---------------------------------------------------------------------------
// Date joins and correlation

/// CalendarDays pairs d with d - lag and skips dates the other series lacks.
/// TradingDays pairs d with the lag-th earlier date present in the other
/// series (lag 0 still means the same date).
enum class LagMode { CalendarDays, TradingDays };

struct JoinedPoint {
  Date date;
  double a = 0;
  double b = 0;
  bool operator==(const JoinedPoint&) const = default;
};

/// Pairs a[d] with b[d - lag] for every d of `a`.
inline std::vector<JoinedPoint> join_on_date(const DailySeries& a, const DailySeries& b, int lag_days,
                                             LagMode mode = LagMode::CalendarDays) {
  if (lag_days < 0) throw Error(ErrorCode::InvalidInput, "lag must be non-negative");
  std::vector<JoinedPoint> out;
  const auto& bp = b.points();
  for (const auto& [date, av] : a.points()) {
    if (mode == LagMode::CalendarDays || lag_days == 0) {
      if (auto bv = b.at(date - lag_days)) out.push_back({date, av, *bv});
      continue;
    }
    auto it = bp.lower_bound(date);
    bool found = true;
    for (int k = 0; k < lag_days; ++k) {
      if (it == bp.begin()) {
        found = false;
        break;
      }
      --it;
    }
    if (found) out.push_back({date, av, it->second});
  }
  return out;
}

/// Sample Pearson correlation, two-pass around the means.
inline double pearson(std::span<const std::pair<double, double>> pairs) {
  const std::size_t n = pairs.size();
  if (n < 3) throw StatError(ErrorCode::InsufficientPairs, std::to_string(n) + " pairs, need at least 3");
  double mx = 0, my = 0;
  for (const auto& [x, y] : pairs) {
    mx += x;
    my += y;
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxy = 0, sxx = 0, syy = 0;
  for (const auto& [x, y] : pairs) {
    const double dx = x - mx;
    const double dy = y - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0 || syy == 0) throw StatError(ErrorCode::ZeroVariance, "a series is constant");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

inline double pearson(const std::vector<JoinedPoint>& joined) {
  std::vector<std::pair<double, double>> pairs;
  pairs.reserve(joined.size());
  for (const auto& p : joined) pairs.emplace_back(p.a, p.b);
  return pearson(std::span<const std::pair<double, double>>(pairs));
}

struct LagResult {
  int best_lag = 0;
  double r_at_best = 0;
  std::map<int, double> r_by_lag;
  std::map<int, std::uint64_t> n_pairs_by_lag;
  /// Why a lag has no r (InsufficientPairs / ZeroVariance).
  std::map<int, std::string> undefined_by_lag;
};

/// Correlates a[d] with b[d - L] for L = 0..max_lag and keeps the strongest
/// positive association; ties go to the smaller lag.
inline LagResult best_lag(const DailySeries& a, const DailySeries& b, int max_lag,
                          LagMode mode = LagMode::CalendarDays) {
  if (max_lag < 0) throw Error(ErrorCode::InvalidInput, "max_lag must be non-negative");
  LagResult result;
  std::optional<int> best;
  for (int lag = 0; lag <= max_lag; ++lag) {
    const auto joined = join_on_date(a, b, lag, mode);
    result.n_pairs_by_lag[lag] = joined.size();
    try {
      const double r = pearson(joined);
      result.r_by_lag[lag] = r;
      if (!best || r > result.r_by_lag[*best]) best = lag;
    } catch (const StatError& e) {
      result.undefined_by_lag[lag] = to_string(e.code());
    }
  }
  if (!best) throw StatError(ErrorCode::NoValidLag, "no lag in 0.." + std::to_string(max_lag) + " has a defined r");
  result.best_lag = *best;
  result.r_at_best = result.r_by_lag[*best];
  return result;
}

// ---------------------------------------------------------------------------
// Daily series builders

/// Per-date count of events of `type`, with a zero for every date that has
/// any event at all.
inline DailySeries daily_event_counts(const std::vector<CleanEcommEvent>& events, EventType type) {
  DailySeries s(std::string(to_string(type)) + "_events");
  for (const auto& e : events) {
    auto& v = s.points()[e.record_date];
    if (e.event_type == type) v += 1;
  }
  return s;
}

/// Per-date count of tweets with `label`, zero-filled over dates that have
/// any tweet.
inline DailySeries daily_tweet_counts(const std::vector<CleanTweetRecord>& tweets, SentimentLabel label) {
  DailySeries s(std::string(to_string(label)) + "_tweets");
  for (const auto& t : tweets) {
    auto& v = s.points()[t.post_date];
    if (t.sentiment == label) v += 1;
  }
  return s;
}

template <typename Field>
DailySeries series_from_summaries(const std::vector<MarketDaySummary>& summaries, std::string label, Field field) {
  DailySeries s(std::move(label));
  for (const auto& m : summaries) s.set(m.date, static_cast<double>(field(m)));
  return s;
}

// ---------------------------------------------------------------------------
// Analyses

struct EngagementCell {
  double mean_likes = 0;
  double mean_comments = 0;
  double mean_retweets = 0;
  std::uint64_t tweet_count = 0;
};

struct EngagementTable {
  std::map<std::pair<Weekday, SentimentLabel>, EngagementCell> rows;
};

/// Mean engagement per (weekday, sentiment). Neutral tweets are left out.
inline EngagementTable engagement_by_sentiment_weekday(const std::vector<CleanTweetRecord>& tweets) {
  struct Acc {
    std::uint64_t likes = 0, comments = 0, retweets = 0, n = 0;
  };
  std::map<std::pair<Weekday, SentimentLabel>, Acc> acc;
  for (const auto& t : tweets) {
    if (t.sentiment == SentimentLabel::Neutral) continue;
    auto& a = acc[{t.post_date.weekday(), t.sentiment}];
    a.likes += t.like_count;
    a.comments += t.comment_count;
    a.retweets += t.retweet_count;
    ++a.n;
  }
  EngagementTable table;
  for (const auto& [key, a] : acc) {
    const auto n = static_cast<double>(a.n);
    table.rows[key] = {static_cast<double>(a.likes) / n, static_cast<double>(a.comments) / n,
                       static_cast<double>(a.retweets) / n, a.n};
  }
  return table;
}

struct AnomalyDates {
  Date missing;
  Date inflated;
};

struct PurchasesVsAdvancers {
  DailySeries purchases;
  DailySeries advancing;
  std::vector<JoinedPoint> pairs;
  double r = 0;
};

/// Purchases on day d against advancing stocks on d - 1. Throws the pearson
/// errors when the pairing is degenerate.
inline PurchasesVsAdvancers purchases_vs_prior_day_advancers(const std::vector<CleanEcommEvent>& events,
                                                            const std::vector<MarketDaySummary>& summaries,
                                                            const std::optional<AnomalyDates>& anomaly = {},
                                                            LagMode mode = LagMode::CalendarDays) {
  if (events.empty() || summaries.empty()) {
    throw StatError(ErrorCode::InsufficientPairs, "no e-commerce events or no stock summaries");
  }
  PurchasesVsAdvancers out;
  out.purchases = daily_event_counts(events, EventType::Purchase);
  if (anomaly) out.purchases = normalize_anomalous_days(out.purchases, anomaly->missing, anomaly->inflated);
  out.advancing = series_from_summaries(summaries, "advancing", [](const MarketDaySummary& m) { return m.advancing; });
  out.pairs = join_on_date(out.purchases, out.advancing, 1, mode);
  out.r = pearson(out.pairs);
  return out;
}

/// Positive-tweet counts leading big-winner counts: lag L pairs tweets on d
/// with winners on d + L.
inline LagResult positive_tweets_vs_big_winners(const std::vector<CleanTweetRecord>& tweets,
                                                const std::vector<MarketDaySummary>& summaries, int max_lag = 2,
                                                LagMode mode = LagMode::CalendarDays) {
  const auto positive = daily_tweet_counts(tweets, SentimentLabel::Positive);
  const auto winners =
      series_from_summaries(summaries, "big_winners", [](const MarketDaySummary& m) { return m.big_winners; });
  return best_lag(winners, positive, max_lag, mode);
}

struct WeeklyTweetsWinners {
  IsoWeek week;
  double positive_tweets = 0;
  double big_winners = 0;
  double stock_days = 0;
  double big_winner_pct = 0;
};

/// Week-number view: positive tweets and the share of big winners among all
/// cohort stock-days of each ISO week.
inline std::vector<WeeklyTweetsWinners> weekly_tweets_vs_winners(const std::vector<CleanTweetRecord>& tweets,
                                                                 const std::vector<MarketDaySummary>& summaries) {
  const auto pos = rollup_weekno(daily_tweet_counts(tweets, SentimentLabel::Positive));
  const auto wins = rollup_weekno(
      series_from_summaries(summaries, "big_winners", [](const MarketDaySummary& m) { return m.big_winners; }));
  const auto days = rollup_weekno(
      series_from_summaries(summaries, "stock_days", [](const MarketDaySummary& m) { return m.total(); }));
  std::map<IsoWeek, WeeklyTweetsWinners> rows;
  for (const auto& [w, v] : pos) {
    rows[w].week = w;
    rows[w].positive_tweets = v;
  }
  for (const auto& [w, v] : wins) {
    rows[w].week = w;
    rows[w].big_winners = v;
  }
  for (const auto& [w, v] : days) {
    rows[w].week = w;
    rows[w].stock_days = v;
  }
  std::vector<WeeklyTweetsWinners> out;
  for (auto& [w, row] : rows) {
    row.big_winner_pct = row.stock_days > 0 ? 100.0 * row.big_winners / row.stock_days : 0.0;
    out.push_back(row);
  }
  return out;
}

struct CategoryActivity {
  std::string category;
  std::uint64_t views = 0;
  std::uint64_t carts = 0;
  std::uint64_t removals = 0;
  std::uint64_t purchases = 0;
};

/// Event counts per category code, ordered by purchases, then carts, then
/// name. Events without a category are not ranked.
inline std::vector<CategoryActivity> category_activity(const std::vector<CleanEcommEvent>& events) {
  std::map<std::string, CategoryActivity> by_category;
  for (const auto& e : events) {
    if (!e.category_code) continue;
    auto& c = by_category[*e.category_code];
    c.category = *e.category_code;
    switch (e.event_type) {
      case EventType::View: ++c.views; break;
      case EventType::Cart: ++c.carts; break;
      case EventType::RemoveFromCart: ++c.removals; break;
      case EventType::Purchase: ++c.purchases; break;
    }
  }
  std::vector<CategoryActivity> out;
  for (auto& [name, c] : by_category) out.push_back(std::move(c));
  std::stable_sort(out.begin(), out.end(), [](const CategoryActivity& x, const CategoryActivity& y) {
    if (x.purchases != y.purchases) return x.purchases > y.purchases;
    return x.carts > y.carts;
  });
  return out;
}

struct Distribution {
  std::uint64_t count = 0;
  double min = 0, q1 = 0, median = 0, q3 = 0, max = 0, mean = 0;
};

/// Order statistics with linear interpolation between closest ranks.
inline Distribution describe(std::vector<double> values) {
  Distribution d;
  d.count = values.size();
  if (values.empty()) return d;
  std::sort(values.begin(), values.end());
  auto quantile = [&](double q) {
    const double pos = q * static_cast<double>(values.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const auto hi = std::min(lo + 1, values.size() - 1);
    return values[lo] + (pos - static_cast<double>(lo)) * (values[hi] - values[lo]);
  };
  d.min = values.front();
  d.max = values.back();
  d.q1 = quantile(0.25);
  d.median = quantile(0.5);
  d.q3 = quantile(0.75);
  d.mean = exact_sum(values) / static_cast<double>(values.size());
  return d;
}

}  // namespace xtrend
