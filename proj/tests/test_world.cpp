#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "numforge/tdgen.hpp"
#include "numforge/world.hpp"

using numforge::ContainerKind;
using numforge::kAnyAttr;
using numforge::Verb;
using numforge::WorldEvent;
using numforge::WorldState;

namespace {

WorldEvent ev(Verb v, std::string cont, std::string entity, std::string attr,
              std::int64_t amount, std::string word = "", std::string other = "") {
  WorldEvent e;
  e.verb = v;
  e.container = std::move(cont);
  e.other = std::move(other);
  e.entity = std::move(entity);
  e.attribute = std::move(attr);
  e.amount = amount;
  e.word = std::move(word);
  return e;
}

// A passage about two countries: recruited and observed groups of families,
// rebels and soldiers, with the counts the sample questions hinge on.
WorldState sample_world() {
  WorldState w;
  w.register_container("Spain", ContainerKind::ENV);
  w.register_container("Russia", ContainerKind::ENV);
  w.apply(ev(Verb::POS, "Spain", "families", "Polish", 1949, "recruited"));
  w.apply(ev(Verb::POS, "Spain", "families", "Japanese", 1996, "recruited"));
  w.apply(ev(Verb::OBS, "Spain", "rebels", "white", 10913, "were"));
  w.apply(ev(Verb::OBS, "Spain", "families", "Chinese", 77, "were"));
  w.apply(ev(Verb::POS, "Russia", "soldiers", "British", 6641, "recruited"));
  w.apply(ev(Verb::POS, "Russia", "rebels", "asian", 476, "recruited"));
  w.apply(ev(Verb::POS, "Russia", "families", "Germans", 338, "recruited"));
  return w;
}

}  // namespace

TEST_CASE("sample world answers selection, difference, complement and total") {
  WorldState w = sample_world();
  CHECK(w.total("Spain", "families", "Japanese") == 1996);
  CHECK(w.total("Spain", "families", "Japanese") - w.total("Spain", "families", "Polish") == 47);
  CHECK(w.total("Spain", "families") == 4022);
  CHECK(w.total("Spain", "families") - w.total("Spain", "families", "Polish") == 2073);

  namespace td = numforge::td;
  td::QuestionBinding sel;
  sel.template_id = 0;
  sel.skill = td::Skill::SELECTION;
  sel.containers = {"Spain"};
  sel.entity = "families";
  sel.attribute = "Japanese";
  CHECK(td::td_oracle(w, sel) == numforge::Answer::make_number(numforge::Decimal::integer(1996)));

  td::QuestionBinding diff;
  diff.skill = td::Skill::INTRA_ENTITY_DIFFERENCE;
  diff.containers = {"Spain"};
  diff.entity = "families";
  diff.attribute = "Japanese";
  diff.entity2 = "families";
  diff.attribute2 = "Polish";
  CHECK(td::td_oracle(w, diff) == numforge::Answer::make_number(numforge::Decimal::integer(47)));

  td::QuestionBinding subset;
  subset.skill = td::Skill::INTRA_ENTITY_SUBSET;
  subset.containers = {"Spain"};
  subset.entity = "families";
  subset.attribute = "Polish";
  subset.complement = true;
  CHECK(td::td_oracle(w, subset) == numforge::Answer::make_number(numforge::Decimal::integer(2073)));
}

TEST_CASE("any-attribute totals are sums over attributes") {
  WorldState w = sample_world();
  std::int64_t by_hand = w.total("Spain", "families", "Polish") +
                         w.total("Spain", "families", "Japanese") +
                         w.total("Spain", "families", "Chinese");
  CHECK(w.total("Spain", "families", kAnyAttr) == by_hand);
  CHECK(w.total("Spain", "rebels") == 10913);
  CHECK(w.total("Russia", "families") == 338);
  CHECK(w.total("Spain", "soldiers") == 0);
  CHECK(w.total("Nowhere", "families") == 0);
}

TEST_CASE("observation asserts, gain adds, loss and destruction subtract") {
  WorldState w;
  w.register_container("Anna", ContainerKind::AGT);
  w.apply(ev(Verb::OBS, "Anna", "sheep", "", 10, "had"));
  CHECK(w.total("Anna", "sheep") == 10);
  w.apply(ev(Verb::OBS, "Anna", "sheep", "", 4, "had"));
  CHECK(w.total("Anna", "sheep") == 4);
  w.apply(ev(Verb::POS, "Anna", "sheep", "", 3, "bought"));
  CHECK(w.total("Anna", "sheep") == 7);
  w.apply(ev(Verb::NEG, "Anna", "sheep", "", 2, "sold"));
  CHECK(w.total("Anna", "sheep") == 5);
  w.apply(ev(Verb::DESTROY, "Anna", "sheep", "", 1, "lost"));
  CHECK(w.total("Anna", "sheep") == 4);
}

TEST_CASE("transfers move counts and conserve the sum") {
  WorldState w;
  w.register_container("Anna", ContainerKind::AGT);
  w.register_container("Boris", ContainerKind::AGT);
  w.apply(ev(Verb::OBS, "Anna", "coins", "", 100, "had"));
  w.apply(ev(Verb::OBS, "Boris", "coins", "", 40, "had"));
  std::int64_t before = w.total("Anna", "coins") + w.total("Boris", "coins");

  w.apply(ev(Verb::NEG_TRN, "Anna", "coins", "", 30, "gave", "Boris"));
  CHECK(w.total("Anna", "coins") == 70);
  CHECK(w.total("Boris", "coins") == 70);

  w.apply(ev(Verb::POS_TRN, "Anna", "coins", "", 10, "took", "Boris"));
  CHECK(w.total("Anna", "coins") == 80);
  CHECK(w.total("Boris", "coins") == 60);
  CHECK(w.total("Anna", "coins") + w.total("Boris", "coins") == before);
}

TEST_CASE("counts never go negative") {
  WorldState w;
  w.register_container("Anna", ContainerKind::AGT);
  w.register_container("Boris", ContainerKind::AGT);
  w.apply(ev(Verb::OBS, "Anna", "coins", "", 5, "had"));
  CHECK_THROWS_AS(w.apply(ev(Verb::NEG, "Anna", "coins", "", 6, "sold")),
                  numforge::NegativeCountError);
  CHECK_THROWS_AS(w.apply(ev(Verb::NEG_TRN, "Anna", "coins", "", 6, "gave", "Boris")),
                  numforge::NegativeCountError);
  CHECK_FALSE(w.try_apply(ev(Verb::NEG, "Anna", "coins", "", 6, "sold")));
  CHECK(w.total("Anna", "coins") == 5);
  CHECK(w.try_apply(ev(Verb::NEG, "Anna", "coins", "", 5, "sold")));
  CHECK(w.total("Anna", "coins") == 0);
}

TEST_CASE("child environment deltas mirror into the parent exactly once") {
  WorldState w;
  w.register_container("Bavaria", ContainerKind::ENV);
  w.register_container("Munich", ContainerKind::ENV, "Bavaria");
  w.apply(ev(Verb::OBS, "Munich", "towers", "", 25, "were"));
  CHECK(w.total("Munich", "towers") == 25);
  CHECK(w.total("Bavaria", "towers") == 25);
  w.apply(ev(Verb::POS, "Bavaria", "towers", "", 5, "built"));
  CHECK(w.total("Munich", "towers") == 25);
  CHECK(w.total("Bavaria", "towers") == 30);
  w.apply(ev(Verb::NEG, "Munich", "towers", "", 10, "demolished"));
  CHECK(w.total("Munich", "towers") == 15);
  CHECK(w.total("Bavaria", "towers") == 20);
}

TEST_CASE("container registration is idempotent but kind changes throw") {
  WorldState w;
  w.register_container("Spain", ContainerKind::ENV);
  w.register_container("Spain", ContainerKind::ENV);
  CHECK(w.is_registered("Spain"));
  CHECK(w.kind_of("Spain") == ContainerKind::ENV);
  CHECK_THROWS(w.register_container("Spain", ContainerKind::AGT));
  CHECK_FALSE(w.is_registered("France"));
}

TEST_CASE("replay rebuilds identical counts") {
  WorldState w = sample_world();
  WorldState r = w.replayed();
  CHECK(w.counts_equal(r));
  CHECK(r.total("Spain", "families") == 4022);
  CHECK(r.events().size() == w.events().size());
}

TEST_CASE("keys lists nonzero counts") {
  WorldState w;
  w.register_container("Anna", ContainerKind::AGT);
  w.apply(ev(Verb::OBS, "Anna", "sheep", "black", 3, "had"));
  w.apply(ev(Verb::NEG, "Anna", "sheep", "black", 3, "sold"));
  w.apply(ev(Verb::OBS, "Anna", "goats", "", 2, "had"));
  auto keys = w.keys();
  REQUIRE(keys.size() == 1);
  CHECK(std::get<0>(keys[0]) == "Anna");
  CHECK(std::get<1>(keys[0]) == "goats");
}

TEST_CASE("verb names round-trip") {
  for (Verb v : {Verb::OBS, Verb::POS, Verb::NEG, Verb::POS_TRN, Verb::NEG_TRN, Verb::DESTROY}) {
    auto back = numforge::verb_from_name(numforge::verb_name(v));
    REQUIRE(back.has_value());
    CHECK(*back == v);
  }
  CHECK_FALSE(numforge::verb_from_name("no-such-verb").has_value());
}
