#include "numforge/ndgen.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <set>

#include "numforge/data.hpp"

namespace numforge::nd {

namespace {

constexpr int kResampleLimit = 10000;

const std::vector<std::string> kMaxWords = {"longest", "last", "highest", "largest", "most"};
const std::vector<std::string> kMinWords = {"shortest", "first", "smallest", "lowest", "least"};
const std::string kAvgWord = "average";
const std::vector<std::string> kDateMaxWords = {"last", "latest", "most recent", "youngest"};
const std::vector<std::string> kDateMinWords = {"first", "earliest", "oldest", "least recent"};
const std::vector<std::string> kUnitWords = {"days", "months", "years"};

const std::array<std::string, 2> kSplitNames = {"train", "dev"};
const std::array<std::string, kKindCount> kKindNames = {
    "signed-combo", "superlative-avg", "arg-superlative",
    "date-superlative", "date-diff", "percentage"};

enum class SupOp { MIN, MAX, AVG };

std::optional<SupOp> number_op(std::string_view word) {
  for (const auto& w : kMaxWords)
    if (w == word) return SupOp::MAX;
  for (const auto& w : kMinWords)
    if (w == word) return SupOp::MIN;
  if (word == kAvgWord) return SupOp::AVG;
  return std::nullopt;
}

std::optional<SupOp> date_op(std::string_view word) {
  for (const auto& w : kDateMaxWords)
    if (w == word) return SupOp::MAX;
  for (const auto& w : kDateMinWords)
    if (w == word) return SupOp::MIN;
  return std::nullopt;
}

std::vector<std::string> split_on(std::string_view text, std::string_view sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = text.find(sep, pos);
    if (next == std::string_view::npos) {
      out.emplace_back(text.substr(pos));
      return out;
    }
    out.emplace_back(text.substr(pos, next - pos));
    pos = next + sep.size();
  }
}

Decimal parse_float_term(std::string_view term) {
  if (term.empty() || !std::isdigit(static_cast<unsigned char>(term[0])))
    throw NdParseError("malformed numeric term: '" + std::string(term) + "'");
  auto parsed = parse_number(term);
  if (!parsed || parsed->grouped)
    throw NdParseError("malformed numeric term: '" + std::string(term) + "'");
  return parsed->value;
}

// "op(inner)" -> {op, inner}
std::pair<std::string, std::string> split_call(const std::string& surface) {
  std::size_t open = surface.find('(');
  if (open == std::string::npos || surface.empty() || surface.back() != ')')
    throw NdParseError("expected 'word(...)': '" + surface + "'");
  return {surface.substr(0, open), surface.substr(open + 1, surface.size() - open - 2)};
}

Answer eval_signed_combo(const std::string& surface) {
  std::string_view rest = surface;
  Decimal total;
  int sign = 1;
  if (!rest.empty() && rest[0] == '-') {
    sign = -1;
    rest.remove_prefix(1);
  }
  while (true) {
    std::size_t plus = rest.find(" + ");
    std::size_t minus = rest.find(" - ");
    std::size_t cut = std::min(plus, minus);
    std::string_view term = rest.substr(0, cut);
    Decimal v = parse_float_term(term);
    total = sign == 1 ? total + v : total - v;
    if (cut == std::string_view::npos) break;
    sign = cut == plus ? 1 : -1;
    rest.remove_prefix(cut + 3);
  }
  return Answer::make_number(total);
}

Answer eval_superlative_avg(const std::string& surface) {
  auto [word, inner] = split_call(surface);
  auto op = number_op(word);
  if (!op) throw NdParseError("unknown operator word: '" + word + "'");
  std::vector<Decimal> values;
  for (const std::string& t : split_on(inner, ", ")) values.push_back(parse_float_term(t));
  if (values.empty()) throw NdParseError("no arguments in: '" + surface + "'");
  if (*op == SupOp::AVG) return Answer::make_number(Decimal::mean(values));
  Decimal best = values[0];
  for (const Decimal& v : values) {
    if ((*op == SupOp::MAX && v > best) || (*op == SupOp::MIN && v < best)) best = v;
  }
  return Answer::make_number(best);
}

Answer eval_arg_superlative(const std::string& surface) {
  auto [word, inner] = split_call(surface);
  bool want_max;
  if (word == "argmax") {
    want_max = true;
  } else if (word == "argmin") {
    want_max = false;
  } else {
    throw NdParseError("unknown operator word: '" + word + "'");
  }
  std::vector<std::pair<std::string, Decimal>> pairs;
  for (const std::string& t : split_on(inner, ", ")) {
    std::size_t sp = t.rfind(' ');
    if (sp == std::string::npos || sp == 0)
      throw NdParseError("malformed word-float pair: '" + t + "'");
    pairs.emplace_back(t.substr(0, sp), parse_float_term(std::string_view(t).substr(sp + 1)));
  }
  if (pairs.empty()) throw NdParseError("no arguments in: '" + surface + "'");
  std::size_t best = 0;
  for (std::size_t i = 1; i < pairs.size(); ++i) {
    if ((want_max && pairs[i].second > pairs[best].second) ||
        (!want_max && pairs[i].second < pairs[best].second))
      best = i;
  }
  return Answer::make_span(pairs[best].first);
}

Answer eval_date_superlative(const std::string& surface) {
  auto [word, inner] = split_call(surface);
  auto op = date_op(word);
  if (!op) throw NdParseError("unknown operator word: '" + word + "'");
  std::vector<std::string> raw = split_on(inner, "; ");
  std::size_t best = 0;
  DateValue best_date;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    auto d = parse_date(raw[i]);
    if (!d) throw NdParseError("malformed date: '" + raw[i] + "'");
    if (i == 0 || (*op == SupOp::MAX && d->serial() > best_date.serial()) ||
        (*op == SupOp::MIN && d->serial() < best_date.serial())) {
      best = i;
      best_date = *d;
    }
  }
  return Answer::make_span(raw[best]);
}

Answer eval_date_diff(const std::string& surface) {
  constexpr std::string_view kPrefix = "diff in ";
  if (surface.rfind(kPrefix, 0) != 0) throw NdParseError("expected 'diff in <unit>(...)'");
  auto [head, inner] = split_call(surface);
  std::string unit_word = head.substr(kPrefix.size());
  DateUnit unit;
  if (unit_word == "days") {
    unit = DateUnit::DAYS;
  } else if (unit_word == "months") {
    unit = DateUnit::MONTHS;
  } else if (unit_word == "years") {
    unit = DateUnit::YEARS;
  } else {
    throw NdParseError("unknown date unit: '" + unit_word + "'");
  }
  std::vector<std::string> raw = split_on(inner, "; ");
  if (raw.size() != 2) throw NdParseError("date difference needs exactly two dates");
  auto d1 = parse_date(raw[0]);
  auto d2 = parse_date(raw[1]);
  if (!d1 || !d2) throw NdParseError("malformed date in: '" + surface + "'");
  return Answer::make_number(date_difference(*d1, *d2, unit));
}

Answer eval_percentage(const std::string& surface) {
  constexpr std::string_view kPercent = "percent ";
  if (surface.rfind(kPercent, 0) != 0) throw NdParseError("expected 'percent [not] <word> :: ...'");
  std::string_view rest = std::string_view(surface).substr(kPercent.size());
  bool complement = false;
  if (rest.rfind("not ", 0) == 0) {
    complement = true;
    rest.remove_prefix(4);
  }
  std::size_t sep = rest.find(" :: ");
  if (sep == std::string_view::npos) throw NdParseError("missing ' :: ' in percentage surface");
  std::string target(rest.substr(0, sep));
  std::optional<Decimal> found;
  for (const std::string& t : split_on(rest.substr(sep + 4), ", ")) {
    if (t.empty() || t.back() != '%')
      throw NdParseError("malformed percentage pair: '" + t + "'");
    std::string_view body = std::string_view(t).substr(0, t.size() - 1);
    std::size_t sp = body.rfind(' ');
    if (sp == std::string_view::npos) throw NdParseError("malformed percentage pair: '" + t + "'");
    if (body.substr(0, sp) == target) found = parse_float_term(body.substr(sp + 1));
  }
  if (!found) throw NdParseError("target word absent from pairs: '" + target + "'");
  Decimal p = *found;
  return Answer::make_number(complement ? Decimal::integer(100) - p : p);
}

}  // namespace

const std::string& split_name(Split s) { return kSplitNames[static_cast<int>(s)]; }

std::optional<Split> split_from_name(std::string_view name) {
  for (int i = 0; i < 2; ++i)
    if (kSplitNames[i] == name) return static_cast<Split>(i);
  return std::nullopt;
}

const std::string& kind_name(Kind k) { return kKindNames[static_cast<int>(k)]; }

std::optional<Kind> kind_from_name(std::string_view name) {
  for (int i = 0; i < kKindCount; ++i)
    if (kKindNames[i] == name) return static_cast<Kind>(i);
  return std::nullopt;
}

const std::vector<Kind>& all_kinds() {
  static const std::vector<Kind> kinds = {Kind::SIGNED_COMBO,    Kind::SUPERLATIVE_AVG,
                                          Kind::ARG_SUPERLATIVE, Kind::DATE_SUPERLATIVE,
                                          Kind::DATE_DIFF,       Kind::PERCENTAGE};
  return kinds;
}

ordered_json nd_to_json(const NdExample& ex) {
  ordered_json j;
  j["kind"] = kind_name(ex.kind);
  j["split"] = split_name(ex.split);
  j["question"] = ex.surface;
  j["answer"] = ex.answer.to_json();
  return j;
}

NdExample nd_from_json(const ordered_json& j) {
  NdExample ex;
  auto kind = kind_from_name(j.at("kind").get<std::string>());
  auto split = split_from_name(j.at("split").get<std::string>());
  if (!kind || !split) throw NdParseError("unknown kind/split in ND record");
  ex.kind = *kind;
  ex.split = *split;
  ex.surface = j.at("question").get<std::string>();
  ex.answer = Answer::from_json(j.at("answer"));
  return ex;
}

NumberPool::NumberPool(std::uint64_t seed, double dev_fraction, std::int64_t max_value)
    : seed_(seed), dev_fraction_(dev_fraction), max_value_(max_value) {
  if (dev_fraction < 0.0 || dev_fraction >= 1.0)
    throw std::invalid_argument("dev fraction must be in [0, 1)");
  if (max_value < 1) throw std::invalid_argument("pool max must be positive");
}

Split NumberPool::split_of(std::int64_t n) const {
  return hash_fraction(seed_, "pool", static_cast<std::uint64_t>(n)) < dev_fraction_ ? Split::DEV
                                                                                     : Split::TRAIN;
}

std::int64_t NumberPool::sample(Split split, Rng& rng) const {
  return sample_in_range(split, 0, max_value_, rng);
}

std::int64_t NumberPool::sample_in_range(Split split, std::int64_t lo, std::int64_t hi,
                                         Rng& rng) const {
  lo = std::max<std::int64_t>(lo, 0);
  hi = std::min(hi, max_value_);
  if (lo > hi) throw std::invalid_argument("empty sampling range");
  for (int tries = 0; tries < kResampleLimit; ++tries) {
    std::int64_t n = rng.range(lo, hi);
    if (split_of(n) == split) return n;
  }
  throw std::runtime_error("no pool member of the requested split in range");
}

std::int64_t date_difference(const DateValue& a, const DateValue& b, DateUnit unit) {
  switch (unit) {
    case DateUnit::DAYS:
      return diff_days(a, b);
    case DateUnit::MONTHS:
      return diff_months(a, b);
    case DateUnit::YEARS:
      return diff_years(a, b);
  }
  throw std::invalid_argument("bad date unit");
}

std::vector<Decimal> sample_dirichlet_split(int k, Rng& rng) {
  if (k < 2) throw std::invalid_argument("dirichlet needs k >= 2");
  for (int tries = 0; tries < kResampleLimit; ++tries) {
    // Flat Dirichlet via normalized unit exponentials; the last value is
    // forced to the remainder so the pre-rounding sum is exactly 100.
    std::vector<double> e(k);
    double sum = 0.0;
    for (double& x : e) {
      x = -std::log(1.0 - rng.uniform01());
      sum += x;
    }
    if (sum <= 0.0) continue;
    std::vector<Decimal> out;
    double used = 0.0;
    for (int i = 0; i < k; ++i) {
      double p = i + 1 < k ? 100.0 * e[i] / sum : 100.0 - used;
      used += p;
      out.push_back(Decimal::from_double(p, 2));
    }
    bool ok = true;
    for (const Decimal& p : out) {
      if (p.units_at(2) <= 0 || p.units_at(2) >= 10000) ok = false;
    }
    if (ok) return out;
  }
  throw std::runtime_error("dirichlet resampling failed");
}

Answer nd_oracle(const std::string& surface, Kind kind) {
  switch (kind) {
    case Kind::SIGNED_COMBO:
      return eval_signed_combo(surface);
    case Kind::SUPERLATIVE_AVG:
      return eval_superlative_avg(surface);
    case Kind::ARG_SUPERLATIVE:
      return eval_arg_superlative(surface);
    case Kind::DATE_SUPERLATIVE:
      return eval_date_superlative(surface);
    case Kind::DATE_DIFF:
      return eval_date_diff(surface);
    case Kind::PERCENTAGE:
      return eval_percentage(surface);
  }
  throw std::invalid_argument("bad kind");
}

NdGenerator::NdGenerator(NdConfig config)
    : config_(config),
      pool_(config.seed, config.dev_fraction, config.pool_max),
      words_(config.words.empty() ? data::builtin_words() : config.words) {
  if (words_.size() < 8) throw std::invalid_argument("word list too small");
}

Decimal NdGenerator::sample_float(Split split, Rng& rng) const {
  std::int64_t whole = pool_.sample(split, rng);
  std::int64_t cents = rng.range(0, 99);
  return Decimal::from_units(whole * 100 + cents, 2);
}

DateValue NdGenerator::sample_date(Split split, Rng& rng) const {
  // "dates until Sep 2019": years share the integer pool so the train/dev
  // partition carries over to date surfaces.
  int year = static_cast<int>(pool_.sample_in_range(split, 1, 2019, rng));
  int month = static_cast<int>(rng.range(1, year == 2019 ? 9 : 12));
  int day = static_cast<int>(rng.range(1, DateValue::days_in_month(year, month)));
  return DateValue{year, month, day};
}

NdExample NdGenerator::generate(std::uint64_t index, Split split,
                                std::optional<Kind> kind) const {
  Rng rng = derived_rng(config_.seed, "nd", index);
  Kind k = kind ? *kind : all_kinds()[index % kKindCount];

  std::string surface;
  Answer expected;
  switch (k) {
    case Kind::SIGNED_COMBO: {
      int n = static_cast<int>(rng.range(2, 4));
      Decimal total;
      for (int i = 0; i < n; ++i) {
        bool minus = rng.bernoulli(0.5);
        Decimal f = sample_float(split, rng);
        total = minus ? total - f : total + f;
        if (i == 0) {
          surface = (minus ? "-" : "") + f.str();
        } else {
          surface += (minus ? " - " : " + ") + f.str();
        }
      }
      expected = Answer::make_number(total);
      break;
    }
    case Kind::SUPERLATIVE_AVG: {
      int n = static_cast<int>(rng.range(2, 4));
      std::string word;
      SupOp op;
      int which = static_cast<int>(rng.below(11));
      if (which < 5) {
        word = kMaxWords[which];
        op = SupOp::MAX;
      } else if (which < 10) {
        word = kMinWords[which - 5];
        op = SupOp::MIN;
      } else {
        word = kAvgWord;
        op = SupOp::AVG;
      }
      std::vector<Decimal> values;
      for (int tries = 0; tries < kResampleLimit && static_cast<int>(values.size()) < n; ++tries) {
        Decimal f = sample_float(split, rng);
        if (op != SupOp::AVG && std::find(values.begin(), values.end(), f) != values.end())
          continue;
        values.push_back(f);
      }
      if (static_cast<int>(values.size()) < n) throw std::runtime_error("float resampling failed");
      surface = word + "(";
      for (int i = 0; i < n; ++i) surface += (i ? ", " : "") + values[i].str();
      surface += ")";
      if (op == SupOp::AVG) {
        expected = Answer::make_number(Decimal::mean(values));
      } else {
        Decimal best = values[0];
        for (const Decimal& v : values)
          if ((op == SupOp::MAX && v > best) || (op == SupOp::MIN && v < best)) best = v;
        expected = Answer::make_number(best);
      }
      break;
    }
    case Kind::ARG_SUPERLATIVE: {
      int n = static_cast<int>(rng.range(2, 4));
      bool want_max = rng.bernoulli(0.5);
      std::vector<std::string> ws;
      std::vector<Decimal> values;
      for (int tries = 0; tries < kResampleLimit && static_cast<int>(ws.size()) < n; ++tries) {
        const std::string& w = rng.pick(words_);
        if (std::find(ws.begin(), ws.end(), w) != ws.end()) continue;
        ws.push_back(w);
      }
      for (int tries = 0; tries < kResampleLimit && static_cast<int>(values.size()) < n; ++tries) {
        Decimal f = sample_float(split, rng);
        if (std::find(values.begin(), values.end(), f) != values.end()) continue;
        values.push_back(f);
      }
      if (static_cast<int>(ws.size()) < n || static_cast<int>(values.size()) < n)
        throw std::runtime_error("argument resampling failed");
      surface = std::string(want_max ? "argmax" : "argmin") + "(";
      std::size_t best = 0;
      for (int i = 0; i < n; ++i) {
        surface += (i ? ", " : "") + ws[i] + " " + values[i].str();
        if ((want_max && values[i] > values[best]) || (!want_max && values[i] < values[best]))
          best = i;
      }
      surface += ")";
      expected = Answer::make_span(ws[best]);
      break;
    }
    case Kind::DATE_SUPERLATIVE: {
      int n = static_cast<int>(rng.range(2, 4));
      int which = static_cast<int>(rng.below(8));
      std::string word = which < 4 ? kDateMaxWords[which] : kDateMinWords[which - 4];
      bool want_max = which < 4;
      std::vector<DateValue> dates;
      std::vector<std::string> rendered;
      for (int tries = 0; tries < kResampleLimit && static_cast<int>(dates.size()) < n; ++tries) {
        DateValue d = sample_date(split, rng);
        bool dup = false;
        for (const DateValue& seen : dates) dup = dup || seen == d;
        if (dup) continue;
        dates.push_back(d);
        rendered.push_back(rng.bernoulli(0.5) ? d.str_day_first() : d.str_month_first());
      }
      if (static_cast<int>(dates.size()) < n) throw std::runtime_error("date resampling failed");
      surface = word + "(";
      std::size_t best = 0;
      for (int i = 0; i < n; ++i) {
        surface += (i ? "; " : "") + rendered[i];
        if ((want_max && dates[i].serial() > dates[best].serial()) ||
            (!want_max && dates[i].serial() < dates[best].serial()))
          best = i;
      }
      surface += ")";
      expected = Answer::make_span(rendered[best]);
      break;
    }
    case Kind::DATE_DIFF: {
      DateUnit unit = static_cast<DateUnit>(rng.below(3));
      DateValue d1 = sample_date(split, rng);
      DateValue d2 = sample_date(split, rng);
      std::string r1 = rng.bernoulli(0.5) ? d1.str_day_first() : d1.str_month_first();
      std::string r2 = rng.bernoulli(0.5) ? d2.str_day_first() : d2.str_month_first();
      surface = "diff in " + kUnitWords[static_cast<int>(unit)] + "(" + r1 + "; " + r2 + ")";
      expected = Answer::make_number(date_difference(d1, d2, unit));
      break;
    }
    case Kind::PERCENTAGE: {
      int n = static_cast<int>(rng.range(2, 4));
      bool complement = rng.bernoulli(0.5);
      std::vector<std::string> ws;
      for (int tries = 0; tries < kResampleLimit && static_cast<int>(ws.size()) < n; ++tries) {
        const std::string& w = rng.pick(words_);
        if (std::find(ws.begin(), ws.end(), w) != ws.end()) continue;
        ws.push_back(w);
      }
      if (static_cast<int>(ws.size()) < n) throw std::runtime_error("word resampling failed");
      std::vector<Decimal> ps = sample_dirichlet_split(n, rng);
      std::size_t target = rng.below(n);
      surface = std::string("percent ") + (complement ? "not " : "") + ws[target] + " ::";
      for (int i = 0; i < n; ++i)
        surface += (i ? ", " : " ") + ws[i] + " " + ps[i].str() + "%";
      expected = Answer::make_number(complement ? Decimal::integer(100) - ps[target] : ps[target]);
      break;
    }
  }

  Answer checked = nd_oracle(surface, k);
  if (!(checked == expected))
    throw std::logic_error("generator/oracle disagreement on: " + surface);
  return NdExample{k, split, std::move(surface), std::move(checked)};
}

}  // namespace numforge::nd
