#include "numforge/date.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace numforge {

namespace {

const std::array<std::string, 12> kMonths = {
    "January", "February", "March",     "April",   "May",      "June",
    "July",    "August",   "September", "October", "November", "December"};

// Howard Hinnant's civil-days algorithm.
std::int64_t days_from_civil(int y, int m, int d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153u * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

std::string pad2(int v) {
  std::string s = std::to_string(v);
  return s.size() < 2 ? "0" + s : s;
}

std::optional<int> parse_int(std::string_view s) {
  if (s.empty() || s.size() > 6) return std::nullopt;
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

bool DateValue::is_leap(int year) {
  return year % 4 == 0 && (year % 100 != 0 || year % 400 == 0);
}

int DateValue::days_in_month(int year, int month) {
  static constexpr std::array<int, 12> kDays = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (month < 1 || month > 12) return 0;
  if (month == 2 && is_leap(year)) return 29;
  return kDays[month - 1];
}

bool DateValue::valid(int year, int month, int day) {
  return year >= 1 && month >= 1 && month <= 12 && day >= 1 && day <= days_in_month(year, month);
}

std::int64_t DateValue::serial() const { return days_from_civil(year, month, day); }

std::string DateValue::str_day_first() const {
  return pad2(day) + " " + month_name(month) + " " + std::to_string(year);
}

std::string DateValue::str_month_first() const {
  return month_name(month) + " " + pad2(day) + ", " + std::to_string(year);
}

std::int64_t diff_days(const DateValue& a, const DateValue& b) {
  return std::abs(a.serial() - b.serial());
}

std::int64_t diff_months(const DateValue& a, const DateValue& b) {
  const DateValue& lo = a <= b ? a : b;
  const DateValue& hi = a <= b ? b : a;
  std::int64_t m = (hi.year - lo.year) * 12 + (hi.month - lo.month);
  if (hi.day < lo.day) --m;
  return m;
}

std::int64_t diff_years(const DateValue& a, const DateValue& b) {
  const DateValue& lo = a <= b ? a : b;
  const DateValue& hi = a <= b ? b : a;
  std::int64_t y = hi.year - lo.year;
  if (hi.month < lo.month || (hi.month == lo.month && hi.day < lo.day)) --y;
  return y;
}

const std::string& month_name(int month) {
  if (month < 1 || month > 12) throw std::out_of_range("month out of range");
  return kMonths[month - 1];
}

std::optional<int> month_from_name(std::string_view name) {
  for (int i = 0; i < 12; ++i) {
    if (kMonths[i] == name) return i + 1;
  }
  return std::nullopt;
}

std::optional<DateValue> parse_date(std::string_view text) {
  // Split on spaces into at most three fields plus an optional comma.
  auto take = [&](std::string_view& rest) -> std::string_view {
    std::size_t sp = rest.find(' ');
    std::string_view tok = rest.substr(0, sp);
    rest = sp == std::string_view::npos ? std::string_view{} : rest.substr(sp + 1);
    return tok;
  };
  std::string_view rest = text;
  std::string_view f1 = take(rest);
  std::string_view f2 = take(rest);
  std::string_view f3 = take(rest);
  if (f1.empty() || f2.empty() || f3.empty() || !rest.empty()) return std::nullopt;

  int day, month, year;
  if (std::isdigit(static_cast<unsigned char>(f1[0]))) {
    // "05 April 112"
    auto d = parse_int(f1);
    auto m = month_from_name(f2);
    auto y = parse_int(f3);
    if (!d || !m || !y) return std::nullopt;
    day = *d;
    month = *m;
    year = *y;
  } else {
    // "June 01, 112"
    if (f2.empty() || f2.back() != ',') return std::nullopt;
    auto m = month_from_name(f1);
    auto d = parse_int(f2.substr(0, f2.size() - 1));
    auto y = parse_int(f3);
    if (!d || !m || !y) return std::nullopt;
    day = *d;
    month = *m;
    year = *y;
  }
  if (!DateValue::valid(year, month, day)) return std::nullopt;
  return DateValue{year, month, day};
}

}  // namespace numforge
