#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace numforge {

// A calendar date in the proleptic Gregorian calendar, year >= 1.
struct DateValue {
  int year = 1;
  int month = 1;  // 1..12
  int day = 1;    // 1..days_in_month

  static bool is_leap(int year);
  static int days_in_month(int year, int month);
  static bool valid(int year, int month, int day);

  // Days since 1970-01-01 (negative before). Exact over the whole range.
  std::int64_t serial() const;

  auto operator<=>(const DateValue& o) const = default;

  // "05 April 112": zero-padded 2-digit day, full month name, bare year.
  std::string str_day_first() const;
  // "June 01, 112": full month name, zero-padded 2-digit day, bare year.
  std::string str_month_first() const;
};

// Absolute gap in whole days.
std::int64_t diff_days(const DateValue& a, const DateValue& b);
// Absolute gap in whole months: month-index distance, reduced by one when
// the later day-of-month has not yet been reached.
std::int64_t diff_months(const DateValue& a, const DateValue& b);
// Absolute gap in whole years, same partial-period rule as months.
std::int64_t diff_years(const DateValue& a, const DateValue& b);

// Accepts either surface rendering above.
std::optional<DateValue> parse_date(std::string_view text);

// 1-based month name lookup ("January".."December").
const std::string& month_name(int month);
// Reverse lookup, exact match only.
std::optional<int> month_from_name(std::string_view name);

}  // namespace numforge
