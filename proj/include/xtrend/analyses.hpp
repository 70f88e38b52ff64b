#pragma once

#include <algorithm>
#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "xtrend/analytics.hpp"
#include "xtrend/clean_job.hpp"
#include "xtrend/cleaning.hpp"
#include "xtrend/report.hpp"
#include "xtrend/stock_metrics.hpp"

namespace xtrend {

inline constexpr std::array<std::string_view, 6> kAnalysisNames = {
    "top-categories", "engagement", "purchases-vs-advancers", "tweets-vs-winners", "top-vs-rest", "weekday-rollup"};

inline constexpr std::string_view to_string(LagMode mode) {
  return mode == LagMode::CalendarDays ? "calendar" : "trading";
}

inline std::optional<LagMode> parse_lag_mode(std::string_view s) {
  if (s == "calendar") return LagMode::CalendarDays;
  if (s == "trading") return LagMode::TradingDays;
  return std::nullopt;
}

struct AnalysisSettings {
  std::filesystem::path cleaned_dir;
  std::optional<TopList> top;
  double threshold_pct = kDefaultBigMoveThresholdPct;
  int max_lag = 2;
  LagMode lag_mode = LagMode::CalendarDays;
  Cohort cohort = Cohort::All;
  std::optional<AnomalyDates> anomaly;
  int top_n = 10;
};

namespace detail {

/// Loads one cleaned dataset and records its provenance in the report.
template <typename Loader>
auto load_input(AnalysisReport& report, const std::filesystem::path& dir, DatasetKind kind, Loader loader) {
  const auto path = clean_file_path(dir, kind);
  if (!std::filesystem::exists(path)) {
    throw Error(ErrorCode::InvalidInput, "missing cleaned file " + path.string() + " (run clean first)");
  }
  auto records = loader(path);
  report.inputs[std::string(to_string(kind))] = {{"file", path.filename().string()},
                                                 {"rows", records.size()},
                                                 {"fnv1a64", fnv1a64_hex(read_file(path))}};
  const auto meta = meta_file_path(dir, kind);
  if (std::filesystem::exists(meta)) {
    const auto j = Json::parse(read_file(meta));
    report.drop_counts[std::string(to_string(kind))] = j.value("drop_counts", Json::object());
  }
  return records;
}

inline Json weekday_cell(Weekday w) {
  return {{"weekday", std::string(weekday_name(w))}, {"iso", iso_number(w)}, {"sunday_first", sunday_first_number(w)}};
}

inline Json lag_result_json(const LagResult& r) {
  Json by_lag = Json::array();
  for (const auto& [lag, n] : r.n_pairs_by_lag) {
    Json row = {{"lag", lag}, {"n_pairs", n}};
    if (auto it = r.r_by_lag.find(lag); it != r.r_by_lag.end()) row["r"] = it->second;
    else row["r"] = nullptr;
    if (auto it = r.undefined_by_lag.find(lag); it != r.undefined_by_lag.end()) row["undefined"] = it->second;
    by_lag.push_back(std::move(row));
  }
  return {{"best_lag", r.best_lag}, {"r_at_best", r.r_at_best}, {"by_lag", std::move(by_lag)}};
}

inline void mark_undefined(AnalysisReport& report, const StatError& e) {
  report.status = "undefined";
  report.reason = e.what();
}

inline Json top_list_json(const std::optional<TopList>& top) {
  if (!top) return nullptr;
  std::string joined;
  for (const auto& t : top->tickers()) joined += t + "\n";
  return {{"tickers", top->tickers().size()}, {"fnv1a64", fnv1a64_hex(joined)}};
}

inline Json anomaly_json(const std::optional<AnomalyDates>& a) {
  if (!a) return nullptr;
  return {{"missing", a->missing.to_string()}, {"inflated", a->inflated.to_string()}};
}

inline DailySeries maybe_repair(DailySeries s, const std::optional<AnomalyDates>& anomaly) {
  if (!anomaly) return s;
  auto label = s.label();
  auto repaired = normalize_anomalous_days(s, anomaly->missing, anomaly->inflated);
  return DailySeries(label, repaired.points());
}

inline DailySeries relabel(const DailySeries& s, std::string label) { return DailySeries(std::move(label), s.points()); }

inline const TopList& require_top(const AnalysisSettings& settings, std::string_view analysis) {
  if (!settings.top) throw Error(ErrorCode::Config, std::string(analysis) + " needs --top-list");
  return *settings.top;
}

// ---------------------------------------------------------------------------

inline void top_categories(AnalysisReport& report, const AnalysisSettings& settings) {
  report.parameters = {{"top_n", settings.top_n}, {"anomaly", anomaly_json(settings.anomaly)}};
  const auto events = load_input(report, settings.cleaned_dir, DatasetKind::Ecommerce, load_clean_ecomm);

  const auto ranked = category_activity(events);
  Json categories = Json::array();
  for (std::size_t i = 0; i < ranked.size() && i < static_cast<std::size_t>(settings.top_n); ++i) {
    const auto& c = ranked[i];
    categories.push_back({{"rank", i + 1},
                          {"category", c.category},
                          {"views", c.views},
                          {"carts", c.carts},
                          {"removals", c.removals},
                          {"purchases", c.purchases}});
  }

  std::array<std::uint64_t, 4> totals{};
  for (const auto& e : events) ++totals[static_cast<std::size_t>(e.event_type)];
  Json event_totals = Json::array();
  for (auto t : {EventType::View, EventType::Cart, EventType::RemoveFromCart, EventType::Purchase}) {
    event_totals.push_back({{"event_type", std::string(to_string(t))}, {"events", totals[static_cast<std::size_t>(t)]}});
  }

  const auto carts = maybe_repair(relabel(daily_event_counts(events, EventType::Cart), "daily_carts"), settings.anomaly);
  const auto purchases =
      maybe_repair(relabel(daily_event_counts(events, EventType::Purchase), "daily_purchases"), settings.anomaly);
  const auto cart_profile = rollup_weekday(carts, Aggregate::Mean);
  const auto purchase_profile = rollup_weekday(purchases, Aggregate::Mean);

  Json weekday = Json::array();
  for (auto w : kAllWeekdays) {
    if (!cart_profile.counts.count(w)) continue;
    Json row = weekday_cell(w);
    row["days"] = cart_profile.counts.at(w);
    row["mean_carts"] = cart_profile.values.at(w);
    row["mean_purchases"] = purchase_profile.values.at(w);
    weekday.push_back(std::move(row));
  }

  // How far the weekend days stand above the weekday average.
  auto weekend_ratio = [](const WeekdayProfile& p) -> Json {
    std::vector<double> weekdays;
    for (auto w : {Weekday::Mon, Weekday::Tue, Weekday::Wed, Weekday::Thu, Weekday::Fri}) {
      if (p.values.count(w)) weekdays.push_back(p.values.at(w));
    }
    if (weekdays.empty() || !p.values.count(Weekday::Sat) || !p.values.count(Weekday::Sun)) return nullptr;
    const double base = exact_sum(weekdays) / static_cast<double>(weekdays.size());
    if (base == 0) return nullptr;
    return std::min(p.values.at(Weekday::Sat), p.values.at(Weekday::Sun)) / base;
  };

  // Per-category weekday profile for the leading categories.
  Json category_weekday = Json::array();
  std::map<Date, bool> event_dates;
  for (const auto& e : events) event_dates[e.record_date] = true;
  for (std::size_t i = 0; i < ranked.size() && i < 4; ++i) {
    std::vector<CleanEcommEvent> subset;
    for (const auto& e : events) {
      if (e.category_code == ranked[i].category) subset.push_back(e);
    }
    DailySeries c("carts");
    DailySeries p("purchases");
    for (const auto& [d, _] : event_dates) {
      c.set(d, 0);
      p.set(d, 0);
    }
    for (const auto& e : subset) {
      if (e.event_type == EventType::Cart) c.points()[e.record_date] += 1;
      if (e.event_type == EventType::Purchase) p.points()[e.record_date] += 1;
    }
    const auto cp = rollup_weekday(maybe_repair(c, settings.anomaly), Aggregate::Mean);
    const auto pp = rollup_weekday(maybe_repair(p, settings.anomaly), Aggregate::Mean);
    for (auto w : kAllWeekdays) {
      if (!cp.counts.count(w)) continue;
      Json row = {{"category", ranked[i].category}};
      row.update(weekday_cell(w));
      row["mean_carts"] = cp.values.at(w);
      row["mean_purchases"] = pp.values.at(w);
      category_weekday.push_back(std::move(row));
    }
  }

  report.result = {{"categories_ranked", ranked.size()},
                   {"weekend_to_weekday_carts", weekend_ratio(cart_profile)},
                   {"weekend_to_weekday_purchases", weekend_ratio(purchase_profile)}};
  report.tables["categories"] = std::move(categories);
  report.tables["event_totals"] = std::move(event_totals);
  report.tables["weekday"] = std::move(weekday);
  report.tables["category_weekday"] = std::move(category_weekday);
  report.series = {purchases, carts};
}

inline void engagement(AnalysisReport& report, const AnalysisSettings& settings) {
  const auto tweets = load_input(report, settings.cleaned_dir, DatasetKind::Tweets, load_clean_tweets);
  const auto table = engagement_by_sentiment_weekday(tweets);

  Json rows = Json::array();
  for (const auto& [key, cell] : table.rows) {
    Json row = weekday_cell(key.first);
    row["sentiment"] = std::string(to_string(key.second));
    row["tweets"] = cell.tweet_count;
    row["mean_likes"] = cell.mean_likes;
    row["mean_comments"] = cell.mean_comments;
    row["mean_retweets"] = cell.mean_retweets;
    rows.push_back(std::move(row));
  }

  Json overall = Json::array();
  for (auto label : {SentimentLabel::Positive, SentimentLabel::Negative}) {
    std::uint64_t n = 0, likes = 0, comments = 0, retweets = 0;
    for (const auto& t : tweets) {
      if (t.sentiment != label) continue;
      ++n;
      likes += t.like_count;
      comments += t.comment_count;
      retweets += t.retweet_count;
    }
    if (n == 0) continue;
    const auto dn = static_cast<double>(n);
    overall.push_back({{"sentiment", std::string(to_string(label))},
                       {"tweets", n},
                       {"mean_likes", static_cast<double>(likes) / dn},
                       {"mean_comments", static_cast<double>(comments) / dn},
                       {"mean_retweets", static_cast<double>(retweets) / dn}});
  }

  report.result = {{"cells", table.rows.size()}};
  report.tables["by_weekday"] = std::move(rows);
  report.tables["overall"] = std::move(overall);
  if (!tweets.empty()) {
    report.series = {relabel(daily_tweet_counts(tweets, SentimentLabel::Positive), "daily_positive_tweets"),
                     relabel(daily_tweet_counts(tweets, SentimentLabel::Negative), "daily_negative_tweets")};
  }
}

inline void purchases_vs_advancers(AnalysisReport& report, const AnalysisSettings& settings) {
  report.parameters = {{"lag_days", 1},
                       {"lag_mode", std::string(to_string(settings.lag_mode))},
                       {"threshold_pct", settings.threshold_pct},
                       {"anomaly", anomaly_json(settings.anomaly)}};
  const auto events = load_input(report, settings.cleaned_dir, DatasetKind::Ecommerce, load_clean_ecomm);
  const auto stocks = load_input(report, settings.cleaned_dir, DatasetKind::Stocks, load_clean_stocks);
  const auto summaries = summarize_by_date(stocks, Cohort::All, settings.threshold_pct);

  auto purchases = relabel(daily_event_counts(events, EventType::Purchase), "daily_purchases");
  if (!events.empty()) purchases = maybe_repair(purchases, settings.anomaly);
  const auto advancing = series_from_summaries(summaries, "daily_advancing",
                                               [](const MarketDaySummary& m) { return m.advancing; });
  const auto pairs = join_on_date(purchases, advancing, 1, settings.lag_mode);

  Json rows = Json::array();
  for (const auto& p : pairs) {
    rows.push_back({{"date", p.date.to_string()}, {"purchases", p.a}, {"prior_day_advancing", p.b}});
  }
  report.tables["pairs"] = std::move(rows);
  report.series = {purchases, advancing};
  report.result = {{"n_pairs", pairs.size()}};
  try {
    const auto full = purchases_vs_prior_day_advancers(events, summaries, settings.anomaly, settings.lag_mode);
    report.result["r"] = full.r;
  } catch (const StatError& e) {
    report.result["r"] = nullptr;
    mark_undefined(report, e);
  }
}

inline void tweets_vs_winners(AnalysisReport& report, const AnalysisSettings& settings) {
  report.parameters = {{"cohort", std::string(to_string(settings.cohort))},
                       {"max_lag", settings.max_lag},
                       {"lag_mode", std::string(to_string(settings.lag_mode))},
                       {"threshold_pct", settings.threshold_pct},
                       {"top_list", top_list_json(settings.top)}};
  const auto tweets = load_input(report, settings.cleaned_dir, DatasetKind::Tweets, load_clean_tweets);
  const auto stocks = load_input(report, settings.cleaned_dir, DatasetKind::Stocks, load_clean_stocks);
  const TopList* top = settings.top ? &*settings.top : nullptr;
  const auto cohort_records = select_cohort(stocks, settings.cohort, top);
  const auto summaries = summarize_by_date(cohort_records, settings.cohort, settings.threshold_pct);

  const auto weekly = weekly_tweets_vs_winners(tweets, summaries);
  Json weekly_rows = Json::array();
  std::vector<std::pair<double, double>> change_vs_pct;
  for (std::size_t i = 0; i < weekly.size(); ++i) {
    const auto& w = weekly[i];
    Json row = {{"iso_year", w.week.year},
                {"iso_week", w.week.week},
                {"positive_tweets", w.positive_tweets},
                {"big_winners", w.big_winners},
                {"stock_days", w.stock_days},
                {"big_winner_pct", w.big_winner_pct}};
    if (i > 0) {
      const double change = w.positive_tweets - weekly[i - 1].positive_tweets;
      row["positive_tweets_change"] = change;
      if (w.stock_days > 0) change_vs_pct.emplace_back(change, w.big_winner_pct);
    } else {
      row["positive_tweets_change"] = nullptr;
    }
    weekly_rows.push_back(std::move(row));
  }
  Json weekly_corr;
  try {
    weekly_corr = {{"r", pearson(std::span<const std::pair<double, double>>(change_vs_pct))},
                   {"n_weeks", change_vs_pct.size()}};
  } catch (const StatError& e) {
    weekly_corr = {{"r", nullptr}, {"n_weeks", change_vs_pct.size()}, {"undefined", std::string(to_string(e.code()))}};
  }

  report.tables["weekly"] = std::move(weekly_rows);
  report.series = {relabel(daily_tweet_counts(tweets, SentimentLabel::Positive), "daily_positive_tweets"),
                   series_from_summaries(summaries, "daily_big_winners",
                                         [](const MarketDaySummary& m) { return m.big_winners; })};
  try {
    const auto lag = positive_tweets_vs_big_winners(tweets, summaries, settings.max_lag, settings.lag_mode);
    report.result = lag_result_json(lag);
  } catch (const StatError& e) {
    report.result = {{"best_lag", nullptr}, {"r_at_best", nullptr}};
    mark_undefined(report, e);
  }
  report.result["weekly_change_vs_big_winner_pct"] = std::move(weekly_corr);
}

inline void top_vs_rest(AnalysisReport& report, const AnalysisSettings& settings) {
  report.parameters = {{"threshold_pct", settings.threshold_pct}, {"top_list", top_list_json(settings.top)}};
  const auto& top = require_top(settings, "top-vs-rest");
  const auto stocks = load_input(report, settings.cleaned_dir, DatasetKind::Stocks, load_clean_stocks);

  Json daily = Json::array();
  Json spread = Json::array();
  for (auto cohort : {Cohort::Top, Cohort::Rest, Cohort::All}) {
    const auto summaries = summarize_by_date(select_cohort(stocks, cohort, &top), cohort, settings.threshold_pct);
    std::vector<double> adv, dec;
    for (const auto& s : summaries) {
      adv.push_back(s.pct_advancing);
      dec.push_back(s.pct_declining());
      daily.push_back({{"date", s.date.to_string()},
                       {"cohort", std::string(to_string(cohort))},
                       {"stocks", s.total()},
                       {"advancing", s.advancing},
                       {"declining", s.declining},
                       {"unchanged", s.unchanged},
                       {"big_winners", s.big_winners},
                       {"big_losers", s.big_losers},
                       {"pct_advancing", s.pct_advancing},
                       {"pct_declining", s.pct_declining()}});
    }
    for (const auto& [measure, values] : {std::pair{"pct_advancing", adv}, std::pair{"pct_declining", dec}}) {
      const auto d = describe(values);
      spread.push_back({{"cohort", std::string(to_string(cohort))},
                        {"measure", measure},
                        {"days", d.count},
                        {"min", d.min},
                        {"q1", d.q1},
                        {"median", d.median},
                        {"q3", d.q3},
                        {"max", d.max},
                        {"mean", d.mean},
                        {"iqr", d.q3 - d.q1}});
    }
    report.series.push_back(series_from_summaries(summaries, "pct_advancing_" + std::string(to_string(cohort)),
                                                  [](const MarketDaySummary& m) { return m.pct_advancing; }));
  }
  report.result = {{"trading_days", report.series.back().size()}};
  report.tables["spread"] = std::move(spread);
  report.tables["daily"] = std::move(daily);
}

inline void weekday_rollup(AnalysisReport& report, const AnalysisSettings& settings) {
  report.parameters = {{"threshold_pct", settings.threshold_pct}, {"top_list", top_list_json(settings.top)}};
  const auto& top = require_top(settings, "weekday-rollup");
  const auto stocks = load_input(report, settings.cleaned_dir, DatasetKind::Stocks, load_clean_stocks);

  Json rows = Json::array();
  for (auto cohort : {Cohort::Top, Cohort::Rest, Cohort::All}) {
    const auto summaries = summarize_by_date(select_cohort(stocks, cohort, &top), cohort, settings.threshold_pct);
    if (summaries.empty()) continue;
    const auto name = std::string(to_string(cohort));
    const auto winners = series_from_summaries(summaries, "big_winners_" + name,
                                               [](const MarketDaySummary& m) { return m.big_winners; });
    const auto losers = series_from_summaries(summaries, "big_losers_" + name,
                                              [](const MarketDaySummary& m) { return m.big_losers; });
    const auto winner_pct = series_from_summaries(summaries, "big_winner_pct", [](const MarketDaySummary& m) {
      return 100.0 * static_cast<double>(m.big_winners) / static_cast<double>(m.total());
    });
    const auto loser_pct = series_from_summaries(summaries, "big_loser_pct", [](const MarketDaySummary& m) {
      return 100.0 * static_cast<double>(m.big_losers) / static_cast<double>(m.total());
    });
    const auto advancing = series_from_summaries(summaries, "advancing",
                                                 [](const MarketDaySummary& m) { return m.advancing; });
    const auto w = rollup_weekday(winners, Aggregate::Mean);
    const auto l = rollup_weekday(losers, Aggregate::Mean);
    const auto wp = rollup_weekday(winner_pct, Aggregate::Mean);
    const auto lp = rollup_weekday(loser_pct, Aggregate::Mean);
    const auto a = rollup_weekday(advancing, Aggregate::Mean);
    for (auto day : kAllWeekdays) {
      if (!w.counts.count(day)) continue;
      Json row = {{"cohort", name}};
      row.update(weekday_cell(day));
      row["days"] = w.counts.at(day);
      row["mean_big_winners"] = w.values.at(day);
      row["mean_big_losers"] = l.values.at(day);
      row["mean_big_winner_pct"] = wp.values.at(day);
      row["mean_big_loser_pct"] = lp.values.at(day);
      row["mean_advancing"] = a.values.at(day);
      rows.push_back(std::move(row));
    }
    report.series.push_back(winners);
    report.series.push_back(losers);
  }
  report.result = {{"rows", rows.size()}};
  report.tables["by_weekday"] = std::move(rows);
}

}  // namespace detail

/// Runs one named analysis over the cleaned files in settings.cleaned_dir.
/// Statistics that are undefined on the data come back as a report with
/// status "undefined"; bad configuration or missing inputs throw.
inline AnalysisReport run_analysis(std::string_view name, const AnalysisSettings& settings) {
  if (!(settings.threshold_pct > 0)) throw Error(ErrorCode::Config, "threshold must be positive");
  if (settings.max_lag < 0) throw Error(ErrorCode::Config, "max lag must be non-negative");
  AnalysisReport report;
  report.analysis = std::string(name);
  if (name == "top-categories") detail::top_categories(report, settings);
  else if (name == "engagement") detail::engagement(report, settings);
  else if (name == "purchases-vs-advancers") detail::purchases_vs_advancers(report, settings);
  else if (name == "tweets-vs-winners") detail::tweets_vs_winners(report, settings);
  else if (name == "top-vs-rest") detail::top_vs_rest(report, settings);
  else if (name == "weekday-rollup") detail::weekday_rollup(report, settings);
  else throw Error(ErrorCode::Config, "unknown analysis '" + std::string(name) + "'");
  return report;
}

}  // namespace xtrend
