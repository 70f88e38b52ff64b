#pragma once

// Reference computations used to check the library. Nothing here calls into
// xtrend, so a bug in the library cannot hide behind the same bug here.

#include <cmath>
#include <cstdint>
#include <ctime>
#include <utility>
#include <vector>

namespace oracle {

struct Ymd {
  int y, m, d;
  bool operator==(const Ymd&) const = default;
};

/// Calendar date of a UTC epoch second, straight from the C library.
inline Ymd utc_date(std::int64_t epoch_seconds) {
  const std::time_t t = static_cast<std::time_t>(epoch_seconds);
  std::tm tm{};
  gmtime_r(&t, &tm);
  return {tm.tm_year + 1900, tm.tm_mon + 1, tm.tm_mday};
}

inline std::int64_t days_from_civil(int y, int m, int d) {
  std::tm tm{};
  tm.tm_year = y - 1900;
  tm.tm_mon = m - 1;
  tm.tm_mday = d;
  tm.tm_hour = 12;
  const std::int64_t secs = static_cast<std::int64_t>(timegm(&tm));
  return (secs - 12 * 3600) / 86400;
}

/// Zeller's congruence, converted to ISO numbering (Mon=1 ... Sun=7).
inline int zeller_iso_weekday(int y, int m, int d) {
  if (m < 3) {
    m += 12;
    y -= 1;
  }
  const int k = y % 100;
  const int j = y / 100;
  const int h = (d + 13 * (m + 1) / 5 + k + k / 4 + j / 4 + 5 * j) % 7;  // 0 = Saturday
  return (h + 5) % 7 + 1;
}

inline bool is_leap(int y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

/// ISO week by walking from the first Monday of week 1 (the Monday on or
/// before January 4) of the candidate ISO year.
inline std::pair<int, int> iso_week(int y, int m, int d) {
  const std::int64_t day = days_from_civil(y, m, d);
  auto week1_monday = [](int year) {
    const std::int64_t jan4 = days_from_civil(year, 1, 4);
    const int wd = zeller_iso_weekday(year, 1, 4);
    return jan4 - (wd - 1);
  };
  int iso_year = y + 1;
  while (day < week1_monday(iso_year)) --iso_year;
  std::int64_t start = week1_monday(iso_year);
  int week = 1;
  while (start + 7 <= day) {
    start += 7;
    ++week;
  }
  return {iso_year, week};
}

/// Pearson r from its textbook definition, in long double with compensated
/// sums.
inline double pearson(const std::vector<std::pair<double, double>>& pts) {
  const long double n = static_cast<long double>(pts.size());
  auto ksum = [](auto&& get, const auto& v) {
    long double s = 0, c = 0;
    for (const auto& p : v) {
      const long double y = get(p) - c;
      const long double t = s + y;
      c = (t - s) - y;
      s = t;
    }
    return s;
  };
  const long double mx = ksum([](const auto& p) { return static_cast<long double>(p.first); }, pts) / n;
  const long double my = ksum([](const auto& p) { return static_cast<long double>(p.second); }, pts) / n;
  const long double cov = ksum([&](const auto& p) { return (p.first - mx) * (p.second - my); }, pts) / (n - 1);
  const long double vx = ksum([&](const auto& p) { return (p.first - mx) * (p.first - mx); }, pts) / (n - 1);
  const long double vy = ksum([&](const auto& p) { return (p.second - my) * (p.second - my); }, pts) / (n - 1);
  return static_cast<double>(cov / std::sqrt(vx * vy));
}

}  // namespace oracle
