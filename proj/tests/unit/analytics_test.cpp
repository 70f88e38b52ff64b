#include <gtest/gtest.h>

#include "oracles.hpp"
#include "test_support.hpp"
#include "xtrend/analytics.hpp"

using namespace xtrend;
using Pairs = std::vector<std::pair<double, double>>;

namespace {

DailySeries series(std::initializer_list<std::pair<Date, double>> points) {
  DailySeries s("s");
  for (const auto& [d, v] : points) s.set(d, v);
  return s;
}

const Date kNov18 = Date::ymd(2019, 11, 18);
const Date kNov19 = Date::ymd(2019, 11, 19);

/// Exact total of a series whose values are integers or lie on a coarse
/// dyadic grid: long double holds every partial sum without rounding.
long double exact_total(const DailySeries& s) {
  long double t = 0;
  for (const auto& [d, v] : s.points()) t += v;
  return t;
}

DailySeries random_count_series(Rng& rng, std::size_t n, bool dyadic) {
  DailySeries s("r");
  Date d = Date::ymd(2019, 1, 1) + rng.uniform_int(0, 400);
  for (std::size_t i = 0; i < n; ++i) {
    double v = static_cast<double>(rng.uniform_int(0, 1000000));
    if (dyadic) v = static_cast<double>(rng.uniform_int(-(1LL << 40), 1LL << 40)) / 1024.0;
    s.set(d, v);
    d = d + rng.uniform_int(1, 3);
  }
  return s;
}

}  // namespace

TEST(AnomalyRepair, Examples) {
  const Date before = kNov18 - 1;
  const Date after = kNov19 + 1;
  const auto a = normalize_anomalous_days(series({{before, 7}, {kNov19, 1000}, {after, 9}}), kNov18, kNov19);
  EXPECT_EQ(a.at(kNov18), 500);
  EXPECT_EQ(a.at(kNov19), 500);
  EXPECT_EQ(a.at(before), 7);
  EXPECT_EQ(a.at(after), 9);
  const auto b = normalize_anomalous_days(series({{kNov18, 200}, {kNov19, 800}}), kNov18, kNov19);
  EXPECT_EQ(b.at(kNov18), 500);
  EXPECT_EQ(b.at(kNov19), 500);
  try {
    normalize_anomalous_days(series({{kNov18, 1}}), kNov18, kNov19);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DateNotFound);
  }
  EXPECT_THROW(normalize_anomalous_days(series({{kNov19, 1}}), kNov19, kNov19), Error);
}

TEST(AnomalyRepair, ConservesTotalExactly) {
  Rng rng(61);
  for (int i = 0; i < 1000; ++i) {
    auto s = random_count_series(rng, static_cast<std::size_t>(rng.uniform_int(1, 80)), i % 2 == 1);
    const auto dates = s.points();
    auto it = dates.begin();
    std::advance(it, rng.uniform_int(0, static_cast<std::int64_t>(dates.size()) - 1));
    const Date inflated = it->first;
    // missing day: sometimes present, sometimes absent
    const Date missing = rng.bernoulli(0.5) ? inflated - 1 : inflated - 40;
    const auto repaired = normalize_anomalous_days(s, missing, inflated);
    ASSERT_EQ(exact_total(repaired), exact_total(s));
    ASSERT_EQ(repaired.total(), s.total());
    ASSERT_EQ(repaired.at(missing), repaired.at(inflated));
  }
}

TEST(AnomalyRepair, AbsentMissingDayConservesArbitraryReals) {
  Rng rng(62);
  for (int i = 0; i < 1000; ++i) {
    DailySeries s("x");
    const auto n = rng.uniform_int(1, 50);
    for (std::int64_t k = 0; k < n; ++k) s.set(Date::ymd(2020, 1, 1) + k * 2, rng.uniform(-1e6, 1e6));
    const Date inflated = Date::ymd(2020, 1, 1) + 2 * rng.uniform_int(0, n - 1);
    const auto repaired = normalize_anomalous_days(s, inflated + 1, inflated);
    ASSERT_EQ(repaired.total(), s.total());
    ASSERT_EQ(repaired.at(inflated + 1), repaired.at(inflated));
  }
}

TEST(Rollups, WeekdayExamples) {
  const Date mon1 = Date::ymd(2019, 11, 4);
  const Date mon2 = Date::ymd(2019, 11, 11);
  for (const Date d : {mon1, mon2}) ASSERT_EQ(oracle::zeller_iso_weekday(d.year(), d.month(), d.day()), 1);
  const auto p = rollup_weekday(series({{mon1, 10}, {mon2, 20}}), Aggregate::Mean);
  ASSERT_EQ(p.values.size(), 1u);
  EXPECT_EQ(p.values.at(Weekday::Mon), 15);
  EXPECT_EQ(p.counts.at(Weekday::Mon), 2u);

  const Date thu = Date::ymd(2020, 2, 6);
  const auto single = rollup_weekday(series({{thu, 4.5}}), Aggregate::Sum);
  EXPECT_EQ(single.values.size(), 1u);
  EXPECT_EQ(single.values.at(Weekday::Thu), 4.5);
}

TEST(Rollups, WeekNumberExamples) {
  const Date a = Date::ymd(2019, 10, 21);
  const Date b = Date::ymd(2019, 10, 22);
  const auto oa = oracle::iso_week(2019, 10, 21);
  const auto ob = oracle::iso_week(2019, 10, 22);
  ASSERT_EQ(oa, ob);
  const auto w = rollup_weekno(series({{a, 5}, {b, 7}}));
  ASSERT_EQ(w.size(), 1u);
  EXPECT_EQ(w.begin()->first, (IsoWeek{oa.first, oa.second}));
  EXPECT_EQ(w.begin()->second, 12);
  EXPECT_EQ(rollup_weekno(series({{a, 3}})).begin()->second, 3);
}

TEST(Rollups, SumConservation) {
  Rng rng(63);
  for (int i = 0; i < 1000; ++i) {
    const auto s = random_count_series(rng, static_cast<std::size_t>(rng.uniform_int(1, 400)), i % 2 == 1);
    const auto by_day = rollup_weekday(s, Aggregate::Sum);
    const auto by_week = rollup_weekno(s);
    long double day_total = 0, week_total = 0;
    std::uint64_t day_count = 0;
    for (const auto& [w, v] : by_day.values) day_total += v;
    for (const auto& [w, c] : by_day.counts) day_count += c;
    for (const auto& [w, v] : by_week) week_total += v;
    ASSERT_EQ(day_total, exact_total(s));
    ASSERT_EQ(week_total, exact_total(s));
    ASSERT_EQ(day_count, s.size());
  }
}

TEST(Rollups, MeanMatchesBruteForce) {
  Rng rng(64);
  for (int i = 0; i < 200; ++i) {
    const auto s = random_count_series(rng, 60, false);
    const auto p = rollup_weekday(s, Aggregate::Mean);
    for (auto wd : kAllWeekdays) {
      double sum = 0;
      int n = 0;
      for (const auto& [d, v] : s.points()) {
        if (oracle::zeller_iso_weekday(d.year(), d.month(), d.day()) == iso_number(wd)) {
          sum += v;
          ++n;
        }
      }
      if (n == 0) {
        ASSERT_FALSE(p.values.count(wd));
      } else {
        ASSERT_NEAR(p.values.at(wd), sum / n, 1e-9 * std::abs(sum / n) + 1e-12);
      }
    }
  }
}

TEST(JoinOnDate, Examples) {
  const Date mon = Date::ymd(2019, 11, 4);
  const auto j = join_on_date(series({{mon + 1, 10}}), series({{mon, 3}}), 1);
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0], (JoinedPoint{mon + 1, 10, 3}));
  EXPECT_TRUE(join_on_date(series({{mon, 10}}), series({{mon + 5, 1}}), 1).empty());
  const auto same = join_on_date(series({{mon, 1}, {mon + 1, 2}}), series({{mon + 1, 5}, {mon + 2, 6}}), 0);
  ASSERT_EQ(same.size(), 1u);
  EXPECT_EQ(same[0], (JoinedPoint{mon + 1, 2, 5}));
}

TEST(JoinOnDate, LagZeroIsKeyIntersection) {
  Rng rng(65);
  for (int i = 0; i < 300; ++i) {
    const auto a = random_count_series(rng, static_cast<std::size_t>(rng.uniform_int(0, 40)), false);
    const auto b = random_count_series(rng, static_cast<std::size_t>(rng.uniform_int(0, 40)), false);
    const auto j = join_on_date(a, b, 0);
    std::size_t common = 0;
    for (const auto& [d, v] : a.points()) common += b.contains(d) ? 1 : 0;
    ASSERT_EQ(j.size(), common);
    ASSERT_LE(j.size(), std::min(a.size(), b.size()));
    for (const auto& p : j) {
      ASSERT_EQ(a.at(p.date), p.a);
      ASSERT_EQ(b.at(p.date), p.b);
    }
    const auto lagged = join_on_date(a, b, static_cast<int>(rng.uniform_int(1, 5)));
    ASSERT_LE(lagged.size(), std::min(a.size(), b.size()));
  }
}

TEST(JoinOnDate, TradingDayMode) {
  const Date fri = Date::ymd(2019, 11, 8);
  const Date mon = fri + 3;
  const auto a = series({{mon, 10}, {mon + 1, 11}});
  const auto b = series({{fri, 3}, {mon, 4}});
  EXPECT_TRUE(join_on_date(a, b, 1).size() == 1);  // calendar: Sunday missing
  const auto t = join_on_date(a, b, 1, LagMode::TradingDays);
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(t[0], (JoinedPoint{mon, 10, 3}));
  EXPECT_EQ(t[1], (JoinedPoint{mon + 1, 11, 4}));
}

TEST(Pearson, Examples) {
  EXPECT_DOUBLE_EQ(pearson(Pairs{{1, 2}, {2, 4}, {3, 6}}), 1.0);
  EXPECT_DOUBLE_EQ(pearson(Pairs{{1, 3}, {2, 2}, {3, 1}}), -1.0);
  try {
    pearson(Pairs{{1, 2}, {2, 3}});
    FAIL();
  } catch (const StatError& e) {
    EXPECT_EQ(e.code(), ErrorCode::InsufficientPairs);
  }
  try {
    pearson(Pairs{{1, 2}, {2, 2}, {3, 2}});
    FAIL();
  } catch (const StatError& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroVariance);
  }
}

TEST(Pearson, MatchesDefinitionOracle) {
  Rng rng(66);
  for (int i = 0; i < 1000; ++i) {
    const auto n = rng.uniform_int(3, 500);
    Pairs pts;
    const double slope = rng.uniform(-2, 2);
    const double scale = std::pow(10.0, rng.uniform(-3, 4));
    for (std::int64_t k = 0; k < n; ++k) {
      const double x = rng.uniform(-1, 1) * scale;
      pts.emplace_back(x, slope * x + rng.normal() * scale);
    }
    const double r = pearson(pts);
    ASSERT_NEAR(r, oracle::pearson(pts), 1e-9);
    ASSERT_LE(std::abs(r), 1.0);
  }
}

TEST(Pearson, AffineInvarianceAndSymmetry) {
  Rng rng(67);
  for (int i = 0; i < 1000; ++i) {
    const auto n = rng.uniform_int(3, 200);
    Pairs pts, flipped, moved;
    const double alpha = rng.uniform(0.1, 10), beta = rng.uniform(-100, 100);
    const double gamma = rng.uniform(0.1, 10), delta = rng.uniform(-100, 100);
    for (std::int64_t k = 0; k < n; ++k) {
      const double x = rng.normal();
      const double y = 0.5 * x + rng.normal();
      pts.emplace_back(x, y);
      flipped.emplace_back(y, x);
      moved.emplace_back(alpha * x + beta, gamma * y + delta);
    }
    const double r = pearson(pts);
    ASSERT_NEAR(pearson(flipped), r, 1e-9);
    ASSERT_NEAR(pearson(moved), r, 1e-9);
  }
}

namespace {

DailySeries weekday_series(Rng& rng, Date start, int days) {
  DailySeries s("w");
  for (int i = 0; i < days; ++i) {
    const Date d = start + i;
    if (!is_weekend(d.weekday())) s.set(d, rng.uniform(0, 100));
  }
  return s;
}

}  // namespace

TEST(BestLag, PlantedShiftOverWeekdays) {
  // b leads a by one day: a[d] = b[d - 1]
  Rng rng(68);
  const Date start = Date::ymd(2019, 11, 4);
  const auto b = weekday_series(rng, start, 42);
  DailySeries a("a");
  for (const auto& [d, v] : b.points()) a.set(d + 1, v);
  const auto r = best_lag(a, b, 2);
  EXPECT_EQ(r.best_lag, 1);
  EXPECT_DOUBLE_EQ(r.r_at_best, 1.0);
  EXPECT_EQ(r.r_at_best, r.r_by_lag.at(r.best_lag));
  for (const auto& [lag, v] : r.r_by_lag) EXPECT_LE(std::abs(v), 1.0);
}

TEST(BestLag, IdentityPicksZero) {
  DailySeries a("a");
  for (int i = 0; i < 20; ++i) a.set(Date::ymd(2020, 1, 1) + i, i);  // linear, so every lag has r = 1
  const auto r = best_lag(a, a, 2);
  EXPECT_EQ(r.best_lag, 0);
  EXPECT_DOUBLE_EQ(r.r_at_best, 1.0);
  EXPECT_DOUBLE_EQ(r.r_by_lag.at(1), 1.0);
}

TEST(BestLag, RecoversAnyPlantedLag) {
  Rng rng(69);
  for (int i = 0; i < 200; ++i) {
    const int planted = static_cast<int>(rng.uniform_int(0, 4));
    DailySeries b("b"), a("a");
    const Date start = Date::ymd(2021, 3, 1);
    const int n = static_cast<int>(rng.uniform_int(4 + planted, 60));
    for (int k = 0; k < n; ++k) b.set(start + k, rng.uniform(0, 1));
    for (const auto& [d, v] : b.points()) a.set(d + planted, 3 * v + 1);
    ASSERT_EQ(best_lag(a, b, 4).best_lag, planted);
  }
}

TEST(BestLag, DegenerateLagsAreExcluded) {
  const Date start = Date::ymd(2020, 1, 6);
  const auto a = series({{start, 1}, {start + 1, 2}, {start + 2, 4}, {start + 3, 3}});
  const auto r = best_lag(a, a, 3);
  EXPECT_EQ(r.best_lag, 0);
  EXPECT_FALSE(r.r_by_lag.count(2));
  EXPECT_EQ(r.undefined_by_lag.at(2), "InsufficientPairs");
  try {
    best_lag(series({{start, 1}}), series({{start, 1}}), 2);
    FAIL();
  } catch (const StatError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoValidLag);
  }
}

namespace {

CleanTweetRecord tweet(Date d, SentimentLabel s, std::uint64_t likes, std::uint64_t comments = 0,
                       std::uint64_t retweets = 0) {
  return {d, 5, comments, retweets, likes, s};
}

}  // namespace

TEST(Engagement, Examples) {
  const Date mon = Date::ymd(2019, 11, 4);
  const Date fri = mon + 4;
  const auto t1 = engagement_by_sentiment_weekday({tweet(mon, SentimentLabel::Negative, 4)});
  ASSERT_EQ(t1.rows.size(), 1u);
  const auto& cell = t1.rows.at({Weekday::Mon, SentimentLabel::Negative});
  EXPECT_EQ(cell.mean_likes, 4);
  EXPECT_EQ(cell.tweet_count, 1u);
  EXPECT_TRUE(engagement_by_sentiment_weekday({tweet(mon, SentimentLabel::Neutral, 9)}).rows.empty());
  const auto t3 = engagement_by_sentiment_weekday(
      {tweet(fri, SentimentLabel::Positive, 2), tweet(fri, SentimentLabel::Positive, 4)});
  EXPECT_EQ(t3.rows.at({Weekday::Fri, SentimentLabel::Positive}).mean_likes, 3);
}

TEST(Engagement, MatchesBruteForce) {
  Rng rng(70);
  for (int i = 0; i < 200; ++i) {
    std::vector<CleanTweetRecord> tweets;
    const auto n = rng.uniform_int(0, 40);
    for (std::int64_t k = 0; k < n; ++k) {
      tweets.push_back(tweet(Date::ymd(2020, 5, 1) + rng.uniform_int(0, 13),
                             static_cast<SentimentLabel>(rng.uniform_int(-1, 1)),
                             static_cast<std::uint64_t>(rng.uniform_int(0, 100)),
                             static_cast<std::uint64_t>(rng.uniform_int(0, 10)),
                             static_cast<std::uint64_t>(rng.uniform_int(0, 30))));
    }
    const auto table = engagement_by_sentiment_weekday(tweets);
    for (auto wd : kAllWeekdays) {
      for (auto label : {SentimentLabel::Positive, SentimentLabel::Negative, SentimentLabel::Neutral}) {
        double likes = 0, comments = 0, retweets = 0;
        std::uint64_t count = 0;
        for (const auto& t : tweets) {
          if (t.sentiment != label || oracle::zeller_iso_weekday(t.post_date.year(), t.post_date.month(),
                                                                 t.post_date.day()) != iso_number(wd)) {
            continue;
          }
          likes += static_cast<double>(t.like_count);
          comments += static_cast<double>(t.comment_count);
          retweets += static_cast<double>(t.retweet_count);
          ++count;
        }
        const auto it = table.rows.find({wd, label});
        if (label == SentimentLabel::Neutral || count == 0) {
          ASSERT_TRUE(it == table.rows.end());
          continue;
        }
        ASSERT_TRUE(it != table.rows.end());
        const double dn = static_cast<double>(count);
        ASSERT_EQ(it->second.tweet_count, count);
        ASSERT_DOUBLE_EQ(it->second.mean_likes, likes / dn);
        ASSERT_DOUBLE_EQ(it->second.mean_comments, comments / dn);
        ASSERT_DOUBLE_EQ(it->second.mean_retweets, retweets / dn);
      }
    }
  }
}

namespace {

CleanEcommEvent event(Date d, EventType t, std::string category = "c") {
  CleanEcommEvent e;
  e.record_date = d;
  e.event_type = t;
  e.product_id = "1";
  if (!category.empty()) e.category_code = category;
  return e;
}

MarketDaySummary summary(Date d, std::uint64_t advancing, std::uint64_t winners = 0) {
  MarketDaySummary m;
  m.date = d;
  m.advancing = advancing;
  m.big_winners = winners;
  m.declining = 100 - advancing;
  return m;
}

}  // namespace

TEST(PurchasesVsAdvancers, JoinExampleAndErrors) {
  const Date mon = Date::ymd(2019, 11, 4);
  std::vector<CleanEcommEvent> events(100, event(mon + 1, EventType::Purchase));
  events.push_back(event(mon + 1, EventType::View));
  try {
    purchases_vs_prior_day_advancers(events, {summary(mon, 50)});
    FAIL();
  } catch (const StatError& e) {
    EXPECT_EQ(e.code(), ErrorCode::InsufficientPairs);
  }
  const auto pairs = join_on_date(daily_event_counts(events, EventType::Purchase),
                                  series_from_summaries({summary(mon, 50)}, "adv",
                                                        [](const MarketDaySummary& m) { return m.advancing; }),
                                  1);
  ASSERT_EQ(pairs.size(), 1u);
  EXPECT_EQ(pairs[0], (JoinedPoint{mon + 1, 100, 50}));
  EXPECT_THROW(purchases_vs_prior_day_advancers(events, {summary(mon + 10, 50)}), StatError);
  EXPECT_THROW(purchases_vs_prior_day_advancers({}, {summary(mon, 50)}), StatError);
}

TEST(PurchasesVsAdvancers, ProportionalSeriesCorrelates) {
  Rng rng(71);
  const Date start = Date::ymd(2019, 10, 1);
  std::vector<MarketDaySummary> summaries;
  std::vector<CleanEcommEvent> events;
  for (int i = 0; i < 60; ++i) {
    const Date d = start + i;
    if (!is_weekend(d.weekday())) summaries.push_back(summary(d, static_cast<std::uint64_t>(rng.uniform_int(10, 90))));
  }
  for (const auto& m : summaries) {
    for (std::uint64_t k = 0; k < 3 * m.advancing; ++k) events.push_back(event(m.date + 1, EventType::Purchase));
  }
  const auto result = purchases_vs_prior_day_advancers(events, summaries);
  EXPECT_GE(result.r, 0.99);
  // purchases land on the day after each trading day, so every summary pairs
  EXPECT_EQ(result.pairs.size(), summaries.size());
}

TEST(PositiveTweetsVsWinners, PlantedLeadAndDegenerateCohort) {
  Rng rng(72);
  const Date start = Date::ymd(2019, 10, 1);
  std::vector<CleanTweetRecord> tweets;
  std::vector<MarketDaySummary> summaries;
  for (int i = 0; i < 60; ++i) {
    const Date d = start + i;
    const auto pos = rng.uniform_int(5, 50);
    for (std::int64_t k = 0; k < pos; ++k) tweets.push_back(tweet(d, SentimentLabel::Positive, 0));
    tweets.push_back(tweet(d, SentimentLabel::Negative, 0));
    summaries.push_back(summary(d + 1, 0, static_cast<std::uint64_t>(2 * pos)));
  }
  const auto r = positive_tweets_vs_big_winners(tweets, summaries, 2);
  EXPECT_EQ(r.best_lag, 1);
  EXPECT_DOUBLE_EQ(r.r_at_best, 1.0);
  try {
    positive_tweets_vs_big_winners(tweets, {}, 2);
    FAIL();
  } catch (const StatError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoValidLag);
  }
}

TEST(DailyCounts, ZeroFillOverActiveDates) {
  const Date d = Date::ymd(2020, 1, 1);
  const auto s = daily_event_counts({event(d, EventType::View), event(d + 1, EventType::Purchase)}, EventType::Purchase);
  EXPECT_EQ(s.at(d), 0);
  EXPECT_EQ(s.at(d + 1), 1);
  EXPECT_FALSE(s.at(d + 2));
}

TEST(CategoryActivity, RankingAndCounts) {
  const Date d = Date::ymd(2020, 1, 1);
  const auto ranked = category_activity({event(d, EventType::Purchase, "b"), event(d, EventType::Cart, "a"),
                                         event(d, EventType::Purchase, "a"), event(d, EventType::Cart, "a"),
                                         event(d, EventType::Purchase, "c"), event(d, EventType::View, ""),
                                         event(d, EventType::View, "c")});
  ASSERT_EQ(ranked.size(), 3u);
  EXPECT_EQ(ranked[0].category, "a");
  EXPECT_EQ(ranked[0].carts, 2u);
  EXPECT_EQ(ranked[1].category, "b");
  EXPECT_EQ(ranked[2].category, "c");
  EXPECT_EQ(ranked[2].views, 1u);
}

TEST(Describe, Quantiles) {
  const auto d = describe({4, 1, 3, 2, 5});
  EXPECT_EQ(d.count, 5u);
  EXPECT_EQ(d.min, 1);
  EXPECT_EQ(d.q1, 2);
  EXPECT_EQ(d.median, 3);
  EXPECT_EQ(d.q3, 4);
  EXPECT_EQ(d.max, 5);
  EXPECT_EQ(d.mean, 3);
  EXPECT_EQ(describe({1, 2}).median, 1.5);
  EXPECT_EQ(describe({}).count, 0u);
}
