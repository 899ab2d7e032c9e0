#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <sstream>

#include "numforge/ndgen.hpp"

using namespace numforge;
using namespace numforge::nd;

namespace {

// Plain integer-cents arithmetic, independent of the Decimal class.
std::int64_t cents(const std::string& text) {
  bool neg = !text.empty() && text[0] == '-';
  std::size_t i = neg ? 1 : 0;
  std::int64_t whole = 0;
  for (; i < text.size() && text[i] != '.'; ++i) {
    REQUIRE(isdigit(static_cast<unsigned char>(text[i])));
    whole = whole * 10 + (text[i] - '0');
  }
  std::int64_t frac = 0;
  int frac_digits = 0;
  if (i < text.size() && text[i] == '.') {
    for (++i; i < text.size(); ++i) {
      REQUIRE(isdigit(static_cast<unsigned char>(text[i])));
      frac = frac * 10 + (text[i] - '0');
      ++frac_digits;
    }
  }
  REQUIRE(frac_digits <= 2);
  std::int64_t c = whole * 100 + (frac_digits == 1 ? frac * 10 : frac);
  return neg ? -c : c;
}

std::int64_t recompute_signed_combo(const std::string& surface) {
  std::istringstream in(surface);
  std::string tok;
  std::vector<std::string> toks;
  while (in >> tok) toks.push_back(tok);
  REQUIRE(!toks.empty());
  std::int64_t total = cents(toks[0]);
  for (std::size_t i = 1; i + 1 < toks.size(); i += 2) {
    std::int64_t term = cents(toks[i + 1]);
    total += toks[i] == "-" ? -term : term;
  }
  return total;
}

std::int64_t jdn(int y, int m, int d) {
  std::int64_t a = (14 - m) / 12;
  std::int64_t yy = y + 4800 - a;
  std::int64_t mm = m + 12 * a - 3;
  return d + (153 * mm + 2) / 5 + 365 * yy + yy / 4 - yy / 100 + yy / 400 - 32045;
}

std::pair<std::string, std::vector<std::string>> split_call(const std::string& s) {
  std::size_t open = s.find('(');
  REQUIRE(open != std::string::npos);
  REQUIRE(s.back() == ')');
  std::string inner = s.substr(open + 1, s.size() - open - 2);
  std::vector<std::string> args;
  std::string sep = inner.find("; ") != std::string::npos ? "; " : ", ";
  std::size_t pos = 0;
  while (true) {
    std::size_t next = inner.find(sep, pos);
    if (next == std::string::npos) {
      args.push_back(inner.substr(pos));
      break;
    }
    args.push_back(inner.substr(pos, next - pos));
    pos = next + sep.size();
  }
  return {s.substr(0, open), args};
}

}  // namespace

TEST_CASE("worked template examples evaluate exactly") {
  CHECK(nd_oracle("517.4 - 17484 - 10071.75 + 1013.21", Kind::SIGNED_COMBO).number == "-26025.14");
  CHECK(nd_oracle("largest(13.42, 115.5, 72.76)", Kind::SUPERLATIVE_AVG).number == "115.5");
  Answer arg = nd_oracle("argmin(highish 137.1, sightliness 43.2)", Kind::ARG_SUPERLATIVE);
  REQUIRE(arg.spans.size() == 1);
  CHECK(arg.spans[0] == "sightliness");
  Answer dsup = nd_oracle("oldest(June 04, 959; 01 May 959)", Kind::DATE_SUPERLATIVE);
  REQUIRE(dsup.spans.size() == 1);
  CHECK(dsup.spans[0] == "01 May 959");
  CHECK(nd_oracle("diff in days(05 April 112; June 01, 112)", Kind::DATE_DIFF).number == "57");
  CHECK(nd_oracle("percent not sunbird :: sunbird 33.2%, defector 60.77%, molehill 6.03%",
                  Kind::PERCENTAGE)
            .number == "66.8");
}

TEST_CASE("more oracle spot checks") {
  CHECK(nd_oracle("average(1, 2)", Kind::SUPERLATIVE_AVG).number == "1.5");
  CHECK(nd_oracle("smallest(5.5, 5.49, 6)", Kind::SUPERLATIVE_AVG).number == "5.49");
  CHECK(nd_oracle("percent ok :: ok 12.5%, bad 87.5%", Kind::PERCENTAGE).number == "12.5");
  CHECK(nd_oracle("diff in months(15 January 2000; 14 March 2000)", Kind::DATE_DIFF).number == "1");
  CHECK(nd_oracle("diff in years(10 June 1999; 09 June 2001)", Kind::DATE_DIFF).number == "1");
  CHECK(nd_oracle("3.5 + 3.5", Kind::SIGNED_COMBO).number == "7");
  CHECK(nd_oracle("-1 - 2 - 3", Kind::SIGNED_COMBO).number == "-6");
}

TEST_CASE("oracle rejects malformed surfaces") {
  CHECK_THROWS_AS(nd_oracle("", Kind::SIGNED_COMBO), NdParseError);
  CHECK_THROWS_AS(nd_oracle("1 + x", Kind::SIGNED_COMBO), NdParseError);
  CHECK_THROWS_AS(nd_oracle("biggest(1, 2)", Kind::SUPERLATIVE_AVG), NdParseError);
  CHECK_THROWS_AS(nd_oracle("argmid(a 1, b 2)", Kind::ARG_SUPERLATIVE), NdParseError);
  CHECK_THROWS_AS(nd_oracle("oldest(32 January 10)", Kind::DATE_SUPERLATIVE), NdParseError);
  CHECK_THROWS_AS(nd_oracle("diff in weeks(05 April 112; June 01, 112)", Kind::DATE_DIFF),
                  NdParseError);
  CHECK_THROWS_AS(nd_oracle("percent a :: b 10%", Kind::PERCENTAGE), NdParseError);
  CHECK_THROWS_AS(nd_oracle("percent a : b 10%", Kind::PERCENTAGE), NdParseError);
}

TEST_CASE("generated examples agree with an independent recomputation") {
  NdConfig cfg;
  cfg.seed = 20260823;
  NdGenerator gen(cfg);
  for (Kind k : all_kinds()) {
    for (std::uint64_t i = 0; i < 600; ++i) {
      NdExample ex = gen.generate(i, Split::TRAIN, k);
      CHECK(ex.answer == nd_oracle(ex.surface, k));
      switch (k) {
        case Kind::SIGNED_COMBO:
          CHECK(recompute_signed_combo(ex.surface) == cents(ex.answer.number));
          break;
        case Kind::SUPERLATIVE_AVG: {
          auto [word, args] = split_call(ex.surface);
          std::vector<std::int64_t> values;
          for (const std::string& a : args) values.push_back(cents(a));
          if (word == "average") {
            std::int64_t sum = 0;
            for (std::int64_t v : values) sum += v;
            std::int64_t n = static_cast<std::int64_t>(values.size());
            std::int64_t q = sum / n, r = sum % n;
            if (2 * r > n || (2 * r == n && q % 2 != 0)) ++q;
            CHECK(q == cents(ex.answer.number));
          } else {
            std::int64_t best = values[0];
            bool is_max = false, is_min = false;
            for (const char* w : {"longest", "last", "highest", "largest", "most"})
              if (word == w) is_max = true;
            for (const char* w : {"shortest", "first", "smallest", "lowest", "least"})
              if (word == w) is_min = true;
            REQUIRE((is_max || is_min));
            for (std::int64_t v : values) best = is_max ? std::max(best, v) : std::min(best, v);
            CHECK(best == cents(ex.answer.number));
          }
          break;
        }
        case Kind::ARG_SUPERLATIVE: {
          auto [word, args] = split_call(ex.surface);
          REQUIRE((word == "argmax" || word == "argmin"));
          std::string best_word;
          std::int64_t best = 0;
          for (std::size_t a = 0; a < args.size(); ++a) {
            std::size_t sp = args[a].rfind(' ');
            std::int64_t v = cents(args[a].substr(sp + 1));
            if (a == 0 || (word == "argmax" ? v > best : v < best)) {
              best = v;
              best_word = args[a].substr(0, sp);
            }
          }
          REQUIRE(ex.answer.spans.size() == 1);
          CHECK(ex.answer.spans[0] == best_word);
          break;
        }
        case Kind::DATE_SUPERLATIVE: {
          auto [word, args] = split_call(ex.surface);
          bool is_max = false;
          for (const char* w : {"last", "latest", "most recent", "youngest"})
            if (word == w) is_max = true;
          std::string best_span;
          std::int64_t best = 0;
          for (std::size_t a = 0; a < args.size(); ++a) {
            auto d = parse_date(args[a]);
            REQUIRE(d.has_value());
            std::int64_t j = jdn(d->year, d->month, d->day);
            if (a == 0 || (is_max ? j > best : j < best)) {
              best = j;
              best_span = args[a];
            }
          }
          REQUIRE(ex.answer.spans.size() == 1);
          CHECK(ex.answer.spans[0] == best_span);
          break;
        }
        case Kind::DATE_DIFF: {
          auto [word, args] = split_call(ex.surface);
          REQUIRE(args.size() == 2);
          auto d1 = parse_date(args[0]);
          auto d2 = parse_date(args[1]);
          REQUIRE(d1.has_value());
          REQUIRE(d2.has_value());
          if (word == "diff in days") {
            std::int64_t gap = jdn(d1->year, d1->month, d1->day) - jdn(d2->year, d2->month, d2->day);
            CHECK(std::to_string(gap < 0 ? -gap : gap) == ex.answer.number);
          }
          break;
        }
        case Kind::PERCENTAGE: {
          std::string s = ex.surface.substr(8);  // strip "percent "
          bool complement = s.rfind("not ", 0) == 0;
          if (complement) s = s.substr(4);
          std::size_t sep = s.find(" :: ");
          std::string target = s.substr(0, sep);
          std::string rest = s.substr(sep + 4);
          std::int64_t found = -1;
          std::size_t pos = 0;
          while (pos < rest.size()) {
            std::size_t next = rest.find(", ", pos);
            std::string item = rest.substr(pos, next == std::string::npos ? next : next - pos);
            REQUIRE(item.back() == '%');
            item.pop_back();
            std::size_t sp = item.rfind(' ');
            if (item.substr(0, sp) == target) found = cents(item.substr(sp + 1));
            if (next == std::string::npos) break;
            pos = next + 2;
          }
          REQUIRE(found >= 0);
          CHECK((complement ? 10000 - found : found) == cents(ex.answer.number));
          break;
        }
      }
    }
  }
}

TEST_CASE("generation is deterministic in seed and index") {
  NdConfig cfg;
  cfg.seed = 99;
  NdGenerator a(cfg), b(cfg);
  for (std::uint64_t i = 0; i < 200; ++i) {
    NdExample x = a.generate(i, Split::TRAIN);
    NdExample y = b.generate(i, Split::TRAIN);
    CHECK(x.surface == y.surface);
    CHECK(x.answer == y.answer);
    CHECK(x.kind == y.kind);
  }
  cfg.seed = 100;
  NdGenerator c(cfg);
  int differ = 0;
  for (std::uint64_t i = 0; i < 200; ++i)
    differ += c.generate(i, Split::TRAIN).surface != a.generate(i, Split::TRAIN).surface;
  CHECK(differ > 150);
}

TEST_CASE("kind cycles when unset") {
  NdConfig cfg;
  cfg.seed = 5;
  NdGenerator gen(cfg);
  for (std::uint64_t i = 0; i < 24; ++i)
    CHECK(gen.generate(i, Split::TRAIN).kind == all_kinds()[i % all_kinds().size()]);
}

TEST_CASE("train and dev draw from disjoint integer pools") {
  NdConfig cfg;
  cfg.seed = 31337;
  NdGenerator gen(cfg);
  std::set<std::int64_t> train_base, dev_base;
  auto collect = [&](const NdExample& ex, std::set<std::int64_t>& into) {
    if (ex.kind == Kind::PERCENTAGE) return;  // shares are drawn, not pooled
    if (ex.kind == Kind::DATE_SUPERLATIVE || ex.kind == Kind::DATE_DIFF) {
      auto [word, args] = split_call(ex.surface);
      for (const std::string& a : args) {
        auto d = parse_date(a);
        REQUIRE(d.has_value());
        into.insert(d->year);  // years are the pooled integers
      }
      return;
    }
    // float kinds: the whole part of every numeral comes from the pool
    const std::string& s = ex.surface;
    for (std::size_t i = 0; i < s.size();) {
      if (!isdigit(static_cast<unsigned char>(s[i]))) {
        ++i;
        continue;
      }
      bool fractional = i > 0 && s[i - 1] == '.';
      std::int64_t v = 0;
      while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) v = v * 10 + (s[i++] - '0');
      if (!fractional) into.insert(v);
    }
  };
  for (std::uint64_t i = 0; i < 3000; ++i) {
    collect(gen.generate(i, Split::TRAIN), train_base);
    collect(gen.generate(i, Split::DEV), dev_base);
  }
  CHECK(train_base.size() > 100);
  CHECK(dev_base.size() > 20);
  std::set<std::int64_t> both;
  for (std::int64_t v : train_base)
    if (dev_base.count(v)) both.insert(v);
  CHECK(both.empty());
}

TEST_CASE("number pool split is a deterministic partition") {
  NumberPool pool(7, 0.1, 20000);
  int dev = 0;
  for (std::int64_t n = 0; n <= 20000; ++n) {
    Split s = pool.split_of(n);
    CHECK(pool.split_of(n) == s);
    dev += s == Split::DEV;
  }
  CHECK(dev > 20001 * 0.07);
  CHECK(dev < 20001 * 0.13);
}

TEST_CASE("dirichlet shares are strict percentages with bounded drift") {
  Rng rng(2024);
  CHECK_THROWS_AS(sample_dirichlet_split(0, rng), std::invalid_argument);
  CHECK_THROWS_AS(sample_dirichlet_split(1, rng), std::invalid_argument);
  for (int k = 2; k <= 4; ++k) {
    for (int rep = 0; rep < 200; ++rep) {
      auto shares = sample_dirichlet_split(k, rng);
      REQUIRE(static_cast<int>(shares.size()) == k);
      std::int64_t sum = 0;
      for (const Decimal& p : shares) {
        std::int64_t u = p.units_at(2);
        CHECK(u > 0);
        CHECK(u < 10000);
        sum += u;
      }
      // Rounding each share to two decimals moves it by at most half a
      // unit, so the rounded sum stays within k/2 units of 100.
      CHECK(std::llabs(sum - 10000) <= k / 2);
    }
  }
}

TEST_CASE("records round-trip through json") {
  NdConfig cfg;
  cfg.seed = 8;
  NdGenerator gen(cfg);
  for (std::uint64_t i = 0; i < 30; ++i) {
    NdExample ex = gen.generate(i, Split::DEV);
    NdExample back = nd_from_json(nd_to_json(ex));
    CHECK(back.kind == ex.kind);
    CHECK(back.split == ex.split);
    CHECK(back.surface == ex.surface);
    CHECK(back.answer == ex.answer);
  }
}

TEST_CASE("kind and split names round-trip") {
  for (Kind k : all_kinds()) CHECK(kind_from_name(kind_name(k)) == k);
  CHECK(split_from_name("train") == Split::TRAIN);
  CHECK(split_from_name("dev") == Split::DEV);
  CHECK_FALSE(split_from_name("test").has_value());
  CHECK_FALSE(kind_from_name("bogus").has_value());
}
