#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

namespace numforge {

// Exact signed decimal with at most two fractional digits. All answer
// arithmetic goes through this type; binary floating point is never used
// to compute an answer value.
class Decimal {
 public:
  static constexpr int kMaxScale = 2;

  Decimal() = default;

  // value = units * 10^-scale. Stored normalized: trailing fractional
  // zeros are stripped, so (1150, 2) and (115, 1) compare and print alike.
  static Decimal from_units(std::int64_t units, int scale);
  static Decimal integer(std::int64_t v) { return from_units(v, 0); }
  // whole + fraction/100, fraction in [0, 99]; sign taken from `whole`.
  static Decimal from_cents(std::int64_t cents) { return from_units(cents, 2); }

  // Nearest-even rounding at `scale` fractional digits. Used only where a
  // real-valued draw has to be pinned to a printable decimal.
  static Decimal from_double(double v, int scale);

  std::int64_t units_at(int scale) const;  // exact, scale >= scale_
  int scale() const { return scale_; }
  bool is_zero() const { return units_ == 0; }
  bool is_negative() const { return units_ < 0; }

  Decimal operator-() const;
  Decimal operator+(const Decimal& o) const;
  Decimal operator-(const Decimal& o) const;
  Decimal times(std::int64_t k) const;

  // Sum / n, rounded half-to-even at two fractional digits.
  static Decimal mean(std::span<const Decimal> xs);

  auto operator<=>(const Decimal& o) const {
    int s = std::max(scale_, o.scale_);
    return units_at(s) <=> o.units_at(s);
  }
  bool operator==(const Decimal& o) const { return (*this <=> o) == 0; }

  // Canonical rendering: no exponent, no trailing fractional zeros, no
  // trailing '.', and zero prints as "0" (never "-0").
  std::string str() const;
  // Exactly `decimals` fractional digits (>= current scale).
  std::string str_fixed(int decimals) const;
  // Canonical rendering with thousands separators in the integer part.
  std::string str_grouped() const;

 private:
  std::int64_t units_ = 0;
  std::uint8_t scale_ = 0;
};

// A numeral as found in running text.
struct ParsedNumber {
  Decimal value;
  int decimals = 0;   // fractional digits as written ("25.00" -> 2)
  bool grouped = false;  // written with thousands commas
};

// Parses "123", "-10071.75", "290,000". Comma grouping must be exact
// 3-digit groups. More than two fractional digits is rejected.
std::optional<ParsedNumber> parse_number(std::string_view text);

}  // namespace numforge
