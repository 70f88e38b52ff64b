#pragma once

#include <array>
#include <charconv>
#include <chrono>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "xtrend/error.hpp"

namespace xtrend {

/// ISO weekday numbering, Monday = 1 through Sunday = 7.
enum class Weekday : int { Mon = 1, Tue, Wed, Thu, Fri, Sat, Sun };

inline constexpr std::array<Weekday, 7> kAllWeekdays = {
    Weekday::Mon, Weekday::Tue, Weekday::Wed, Weekday::Thu,
    Weekday::Fri, Weekday::Sat, Weekday::Sun};

inline constexpr int iso_number(Weekday w) { return static_cast<int>(w); }

/// Sunday = 1 through Saturday = 7, the numbering used by common BI tools.
inline constexpr int sunday_first_number(Weekday w) { return static_cast<int>(w) % 7 + 1; }

inline constexpr std::string_view weekday_name(Weekday w) {
  constexpr std::array<std::string_view, 7> names = {"Mon", "Tue", "Wed", "Thu",
                                                     "Fri", "Sat", "Sun"};
  return names[static_cast<std::size_t>(iso_number(w) - 1)];
}

inline constexpr bool is_weekend(Weekday w) { return w == Weekday::Sat || w == Weekday::Sun; }

struct IsoWeek {
  int year = 0;
  int week = 0;
  auto operator<=>(const IsoWeek&) const = default;
};

/// A proleptic Gregorian calendar date with day resolution.
class Date {
 public:
  constexpr Date() = default;
  constexpr explicit Date(std::chrono::sys_days days) : days_(days) {}

  static constexpr Date from_days_since_epoch(std::int64_t n) {
    return Date(std::chrono::sys_days(std::chrono::days(n)));
  }

  /// Returns nullopt for impossible dates such as 2019-02-30.
  static constexpr std::optional<Date> from_ymd(int y, int m, int d) {
    if (m < 1 || m > 12 || d < 1 || d > 31) return std::nullopt;
    const std::chrono::year_month_day ymd{std::chrono::year(y),
                                          std::chrono::month(static_cast<unsigned>(m)),
                                          std::chrono::day(static_cast<unsigned>(d))};
    if (!ymd.ok()) return std::nullopt;
    return Date(std::chrono::sys_days(ymd));
  }

  static Date ymd(int y, int m, int d) {
    auto date = from_ymd(y, m, d);
    if (!date) throw Error(ErrorCode::UnparseableDate, "invalid calendar date");
    return *date;
  }

  /// Strict `yyyy-mm-dd`.
  static std::optional<Date> parse_iso(std::string_view s);

  constexpr std::int64_t days_since_epoch() const { return days_.time_since_epoch().count(); }
  constexpr std::chrono::sys_days sys_days() const { return days_; }

  constexpr int year() const { return static_cast<int>(ymd_().year()); }
  constexpr int month() const { return static_cast<int>(static_cast<unsigned>(ymd_().month())); }
  constexpr int day() const { return static_cast<int>(static_cast<unsigned>(ymd_().day())); }

  constexpr Weekday weekday() const {
    return static_cast<Weekday>(std::chrono::weekday(days_).iso_encoding());
  }

  constexpr IsoWeek iso_week() const {
    // The ISO year of a date is the calendar year of the Thursday in its week.
    const Date thursday = *this + (4 - iso_number(weekday()));
    const auto jan1 = std::chrono::sys_days(std::chrono::year(thursday.year()) / 1 / 1);
    const auto ordinal = (thursday.days_ - jan1).count();
    return {thursday.year(), static_cast<int>(ordinal / 7 + 1)};
  }

  std::string to_string() const {
    char buf[16];
    const int y = year();
    const int m = month();
    const int d = day();
    buf[0] = static_cast<char>('0' + (y / 1000) % 10);
    buf[1] = static_cast<char>('0' + (y / 100) % 10);
    buf[2] = static_cast<char>('0' + (y / 10) % 10);
    buf[3] = static_cast<char>('0' + y % 10);
    buf[4] = '-';
    buf[5] = static_cast<char>('0' + m / 10);
    buf[6] = static_cast<char>('0' + m % 10);
    buf[7] = '-';
    buf[8] = static_cast<char>('0' + d / 10);
    buf[9] = static_cast<char>('0' + d % 10);
    return std::string(buf, 10);
  }

  friend constexpr Date operator+(Date d, std::int64_t n) {
    return Date(d.days_ + std::chrono::days(n));
  }
  friend constexpr Date operator-(Date d, std::int64_t n) {
    return Date(d.days_ - std::chrono::days(n));
  }
  friend constexpr std::int64_t operator-(Date a, Date b) { return (a.days_ - b.days_).count(); }
  friend constexpr auto operator<=>(const Date&, const Date&) = default;

 private:
  constexpr std::chrono::year_month_day ymd_() const { return std::chrono::year_month_day(days_); }

  std::chrono::sys_days days_{};
};

namespace detail {

/// Consumes between min_width and max_width ASCII digits starting at pos.
inline std::optional<int> parse_digits(std::string_view s, std::size_t& pos, std::size_t min_width,
                                       std::size_t max_width) {
  std::size_t end = pos;
  while (end < s.size() && end - pos < max_width && s[end] >= '0' && s[end] <= '9') ++end;
  if (end - pos < min_width) return std::nullopt;
  int value = 0;
  std::from_chars(s.data() + pos, s.data() + end, value);
  pos = end;
  return value;
}

inline bool expect_char(std::string_view s, std::size_t& pos, char c) {
  if (pos >= s.size() || s[pos] != c) return false;
  ++pos;
  return true;
}

}  // namespace detail

inline std::optional<Date> Date::parse_iso(std::string_view s) {
  std::size_t pos = 0;
  auto y = detail::parse_digits(s, pos, 4, 4);
  if (!y || !detail::expect_char(s, pos, '-')) return std::nullopt;
  auto m = detail::parse_digits(s, pos, 2, 2);
  if (!m || !detail::expect_char(s, pos, '-')) return std::nullopt;
  auto d = detail::parse_digits(s, pos, 2, 2);
  if (!d || pos != s.size()) return std::nullopt;
  return from_ymd(*y, *m, *d);
}

}  // namespace xtrend

template <>
struct std::hash<xtrend::Date> {
  std::size_t operator()(const xtrend::Date& d) const noexcept {
    return std::hash<std::int64_t>{}(d.days_since_epoch());
  }
};
