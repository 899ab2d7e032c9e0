#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "numforge/decimal.hpp"
#include "numforge/rng.hpp"

using numforge::Decimal;
using numforge::parse_number;

TEST_CASE("construction normalizes trailing zeros") {
  CHECK(Decimal::from_units(1150, 2) == Decimal::from_units(115, 1));
  CHECK(Decimal::from_units(1150, 2).str() == "11.5");
  CHECK(Decimal::from_units(100, 2).str() == "1");
  CHECK(Decimal::integer(0).str() == "0");
  CHECK((-Decimal::integer(0)).str() == "0");
}

TEST_CASE("rendering") {
  CHECK(Decimal::from_cents(-2880836).str() == "-28808.36");
  CHECK(Decimal::from_cents(50).str() == "0.5");
  CHECK(Decimal::from_cents(-50).str() == "-0.5");
  CHECK(Decimal::integer(125000).str_grouped() == "125,000");
  CHECK(Decimal::from_units(98971, 2).str() == "989.71");
  CHECK(Decimal::from_cents(103).str() == "1.03");
  CHECK(Decimal::integer(7).str_fixed(2) == "7.00");
  CHECK(Decimal::from_units(171, 1).str_fixed(2) == "17.10");
  CHECK(Decimal::from_cents(-7).str_fixed(2) == "-0.07");
  CHECK(Decimal::integer(-1234567).str_grouped() == "-1,234,567");
  CHECK(Decimal::integer(999).str_grouped() == "999");
}

TEST_CASE("arithmetic is exact") {
  auto d = [](const char* s) { return parse_number(s)->value; };
  Decimal total = d("517.4") - d("17484") - d("10071.75") + d("1013.21");
  CHECK(total.str() == "-26025.14");
  CHECK((d("98.97") + d("1.03")).str() == "100");
  CHECK(d("0.1") + d("0.2") == d("0.3"));
  CHECK(d("455000") == d("125000").times(-1) + d("290000").times(2));
}

TEST_CASE("mean rounds half to even at two decimals") {
  std::vector<Decimal> xs = {Decimal::integer(1), Decimal::integer(2)};
  CHECK(Decimal::mean(xs).str() == "1.5");
  xs = {Decimal::from_cents(1), Decimal::integer(0)};  // 0.005 -> 0
  CHECK(Decimal::mean(xs).str() == "0");
  xs = {Decimal::from_cents(3), Decimal::integer(0)};  // 0.015 -> 0.02
  CHECK(Decimal::mean(xs).str() == "0.02");
  xs = {Decimal::integer(10), Decimal::integer(20), Decimal::integer(20)};
  CHECK(Decimal::mean(xs).str() == "16.67");
}

TEST_CASE("from_double pins draws to printable decimals") {
  CHECK(Decimal::from_double(33.2, 2).str() == "33.2");
  CHECK(Decimal::from_double(6.034999, 2).str() == "6.03");
  CHECK(Decimal::from_double(0.125, 2).str() == "0.12");  // half to even
  CHECK(Decimal::from_double(0.135, 2).str() == "0.14");
}

TEST_CASE("parse_number accepts the written styles") {
  auto p = parse_number("290,000");
  REQUIRE(p.has_value());
  CHECK(p->value == Decimal::integer(290000));
  CHECK(p->grouped);
  CHECK(p->decimals == 0);

  p = parse_number("-10071.75");
  REQUIRE(p.has_value());
  CHECK(p->value == Decimal::from_cents(-1007175));
  CHECK_FALSE(p->grouped);
  CHECK(p->decimals == 2);

  p = parse_number("25.00");
  REQUIRE(p.has_value());
  CHECK(p->value == Decimal::integer(25));
  CHECK(p->decimals == 2);

  CHECK_FALSE(parse_number("1,23").has_value());
  CHECK_FALSE(parse_number("12,3456").has_value());
  CHECK_FALSE(parse_number("1.234").has_value());
  CHECK_FALSE(parse_number("").has_value());
  CHECK_FALSE(parse_number("abc").has_value());
  CHECK_FALSE(parse_number("1.").has_value());
}

TEST_CASE("parse round-trips canonical renderings") {
  numforge::Rng rng(42);
  for (int i = 0; i < 2000; ++i) {
    std::int64_t cents = static_cast<std::int64_t>(rng.below(4000000)) - 2000000;
    Decimal v = Decimal::from_cents(cents);
    auto back = parse_number(v.str());
    REQUIRE(back.has_value());
    CHECK(back->value == v);
    auto grouped = parse_number(v.str_grouped());
    REQUIRE(grouped.has_value());
    CHECK(grouped->value == v);
  }
}

TEST_CASE("additive identities over random values") {
  numforge::Rng rng(7);
  for (int i = 0; i < 2000; ++i) {
    Decimal a = Decimal::from_cents(static_cast<std::int64_t>(rng.below(2000000)) - 1000000);
    Decimal b = Decimal::from_cents(static_cast<std::int64_t>(rng.below(2000000)) - 1000000);
    CHECK(a + b - b == a);
    CHECK(a - a == Decimal::integer(0));
    CHECK(a + b == b + a);
    CHECK(-(-a) == a);
  }
}

TEST_CASE("comparison respects mixed scales") {
  CHECK(Decimal::from_cents(50) < Decimal::integer(1));
  CHECK(Decimal::integer(115) < parse_number("115.5")->value);
  CHECK(parse_number("115.5")->value < Decimal::integer(116));
  CHECK(parse_number("13.42")->value < parse_number("72.76")->value);
}
