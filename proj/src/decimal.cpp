#include "numforge/decimal.hpp"

#include <cctype>
#include <cfenv>
#include <cmath>
#include <cstdlib>

namespace numforge {

Decimal Decimal::from_units(std::int64_t units, int scale) {
  if (scale < 0 || scale > kMaxScale) throw std::invalid_argument("decimal scale out of range");
  while (scale > 0 && units % 10 == 0) {
    units /= 10;
    --scale;
  }
  Decimal d;
  d.units_ = units;
  d.scale_ = static_cast<std::uint8_t>(scale);
  return d;
}

Decimal Decimal::from_double(double v, int scale) {
  if (scale < 0 || scale > kMaxScale) throw std::invalid_argument("decimal scale out of range");
  double scaled = v;
  for (int i = 0; i < scale; ++i) scaled *= 10.0;
  // llrint honors the default FE_TONEAREST mode, i.e. ties to even.
  return from_units(std::llrint(scaled), scale);
}

std::int64_t Decimal::units_at(int scale) const {
  std::int64_t u = units_;
  for (int i = scale_; i < scale; ++i) u *= 10;
  return u;
}

Decimal Decimal::operator-() const { return from_units(-units_, scale_); }

Decimal Decimal::operator+(const Decimal& o) const {
  int s = std::max<int>(scale_, o.scale_);
  return from_units(units_at(s) + o.units_at(s), s);
}

Decimal Decimal::operator-(const Decimal& o) const { return *this + (-o); }

Decimal Decimal::times(std::int64_t k) const { return from_units(units_ * k, scale_); }

Decimal Decimal::mean(std::span<const Decimal> xs) {
  if (xs.empty()) throw std::invalid_argument("mean of empty span");
  std::int64_t cents = 0;
  for (const Decimal& x : xs) cents += x.units_at(kMaxScale);
  auto n = static_cast<std::int64_t>(xs.size());
  // Half-to-even on the exact rational cents/n.
  std::int64_t q = cents / n;
  std::int64_t r = cents % n;
  if (r < 0) {  // pull toward -inf so the remainder is non-negative
    q -= 1;
    r += n;
  }
  std::int64_t twice = 2 * r;
  if (twice > n || (twice == n && (q % 2 != 0))) q += 1;
  return from_cents(q);
}

std::string Decimal::str() const {
  std::int64_t u = units_ < 0 ? -units_ : units_;
  std::int64_t pow10 = 1;
  for (int i = 0; i < scale_; ++i) pow10 *= 10;
  std::string out;
  if (units_ < 0) out += '-';
  out += std::to_string(u / pow10);
  if (scale_ > 0) {
    std::string frac = std::to_string(u % pow10);
    out += '.';
    out.append(scale_ - frac.size(), '0');
    out += frac;
  }
  return out;
}

std::string Decimal::str_fixed(int decimals) const {
  if (decimals < scale_) throw std::invalid_argument("str_fixed below stored scale");
  std::int64_t u = units_at(std::min(decimals, int(kMaxScale)));
  bool neg = u < 0;
  if (neg) u = -u;
  std::int64_t pow10 = 1;
  int eff = std::min(decimals, int(kMaxScale));
  for (int i = 0; i < eff; ++i) pow10 *= 10;
  std::string out;
  if (neg) out += '-';
  out += std::to_string(u / pow10);
  if (decimals > 0) {
    out += '.';
    std::string frac = std::to_string(u % pow10);
    out.append(eff - frac.size(), '0');
    out += frac;
    out.append(decimals - eff, '0');
  }
  return out;
}

std::string Decimal::str_grouped() const {
  std::string plain = str();
  std::size_t start = plain[0] == '-' ? 1 : 0;
  std::size_t end = plain.find('.');
  if (end == std::string::npos) end = plain.size();
  std::string out = plain.substr(0, start);
  std::size_t ndigits = end - start;
  for (std::size_t i = 0; i < ndigits; ++i) {
    if (i != 0 && (ndigits - i) % 3 == 0) out += ',';
    out += plain[start + i];
  }
  out += plain.substr(end);
  return out;
}

std::optional<ParsedNumber> parse_number(std::string_view text) {
  std::size_t i = 0;
  bool neg = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    neg = text[i] == '-';
    ++i;
  }
  if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) return std::nullopt;

  std::string digits;
  bool grouped = false;
  std::size_t first_group = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    digits += text[i++];
    ++first_group;
  }
  if (i < text.size() && text[i] == ',' && first_group >= 1 && first_group <= 3) {
    // tentative comma grouping: require full ",ddd" groups to the end
    std::size_t j = i;
    std::string grouped_digits = digits;
    bool ok = true;
    while (j < text.size() && text[j] == ',') {
      for (int k = 1; k <= 3; ++k) {
        if (j + k >= text.size() || !std::isdigit(static_cast<unsigned char>(text[j + k]))) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
      grouped_digits.append(text.substr(j + 1, 3));
      j += 4;
    }
    // a following digit would mean a malformed group like "1,2345"
    if (ok && j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ok = false;
    if (ok && j > i) {
      digits = grouped_digits;
      grouped = true;
      i = j;
    }
  }

  int decimals = 0;
  std::string frac;
  if (i < text.size() && text[i] == '.' && i + 1 < text.size() &&
      std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
    std::size_t j = i + 1;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) frac += text[j++];
    if (frac.size() > Decimal::kMaxScale) return std::nullopt;
    decimals = static_cast<int>(frac.size());
    i = j;
  }
  if (i != text.size()) return std::nullopt;
  if (digits.size() + frac.size() > 17) return std::nullopt;  // keep int64 exact

  std::int64_t units = 0;
  for (char c : digits) units = units * 10 + (c - '0');
  for (char c : frac) units = units * 10 + (c - '0');
  if (neg) units = -units;
  return ParsedNumber{Decimal::from_units(units, decimals), decimals, grouped};
}

}  // namespace numforge
