#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "numforge/augment.hpp"

using namespace numforge;
using namespace numforge::aug;

namespace {

QAPair make_qa(std::string question, Answer answer, std::string id = "q") {
  QAPair qa;
  qa.question = std::move(question);
  qa.query_id = std::move(id);
  qa.answer = std::move(answer);
  return qa;
}

Answer num(const char* s) {
  Answer a;
  a.kind = Answer::Kind::Number;
  a.number = s;
  return a;
}

const AugmentConfig& cfg() {
  static const AugmentConfig c;
  return c;
}

}  // namespace

TEST_CASE("number extraction finds styled numerals with spans") {
  auto nums = extract_numbers("roughly 290,000 Indians, 125,000 Bangladeshis and 6.03% more");
  REQUIRE(nums.size() == 3);
  CHECK(nums[0].value == Decimal::integer(290000));
  CHECK(nums[0].grouped);
  CHECK(nums[0].surface("roughly 290,000 Indians, 125,000 Bangladeshis and 6.03% more") ==
        "290,000");
  CHECK(nums[1].value == Decimal::integer(125000));
  CHECK(nums[2].value == parse_number("6.03")->value);
  CHECK(nums[2].decimals == 2);

  nums = extract_numbers("in 1944-45 the 2 sides");
  REQUIRE(nums.size() == 3);
  CHECK(nums[0].value == Decimal::integer(1944));
  CHECK(nums[1].value == Decimal::integer(45));
  CHECK(nums[2].value == Decimal::integer(2));

  CHECK(extract_numbers("no numerals here").empty());
  // grouping must be exact 3-digit blocks; otherwise digits split
  nums = extract_numbers("12,34 items");
  REQUIRE(nums.size() == 2);
  CHECK(nums[0].value == Decimal::integer(12));
}

TEST_CASE("render_like reproduces numeral styles") {
  CHECK(render_like(Decimal::integer(455000), 0, true) == "455,000");
  CHECK(render_like(Decimal::integer(455000), 0, false) == "455000");
  CHECK(render_like(parse_number("1.03")->value, 2, false) == "1.03");
  CHECK(render_like(Decimal::integer(1), 2, false) == "1.00");
  CHECK(render_like(parse_number("66.8")->value, 1, false) == "66.8");
  CHECK(render_like(parse_number("1234.5")->value, 1, true) == "1,234.5");
}

TEST_CASE("builtin antonym lexicon is a strict involution") {
  AntonymLexicon lex = AntonymLexicon::builtin();
  CHECK(lex.word_count() >= 60);
  CHECK(lex.antonym("higher") == "lower");
  CHECK(lex.antonym("smaller") == "larger");
  CHECK(lex.antonym("most") == "least");
  CHECK_FALSE(lex.antonym("purple").has_value());
  // every mapped word maps back to itself in two steps
  for (const char* w : {"higher", "lower", "larger", "smaller", "more", "fewer",
                        "longer", "shorter", "later", "earlier", "best", "worst"}) {
    auto a = lex.antonym(w);
    REQUIRE(a.has_value());
    CHECK(lex.antonym(*a) == std::string(w));
  }
  CHECK_THROWS(lex.add_pair("higher", "shorter"));
  CHECK_THROWS(lex.add_pair("x", "x"));
  lex.add_pair("brighter", "dimmer");
  CHECK(lex.antonym("dimmer") == "brighter");
}

TEST_CASE("comparison question parsing") {
  AntonymLexicon lex = AntonymLexicon::builtin();
  auto cp = parse_comparison_question(
      "Which was higher, the homeowner vacancy rate or rental vacancy rate?", lex);
  REQUIRE(cp.has_value());
  CHECK(cp->comparative == "higher");
  CHECK(cp->option_a == "the homeowner vacancy rate");
  CHECK(cp->option_b == "rental vacancy rate");
  CHECK(cp->stem == "Which was higher, ");

  cp = parse_comparison_question("Which ancestral group is smaller: English or Irish?", lex);
  REQUIRE(cp.has_value());
  CHECK(cp->comparative == "smaller");
  CHECK(cp->option_a == "English");
  CHECK(cp->option_b == "Irish");

  cp = parse_comparison_question("Who scored more, Akers or Vinatieri?", lex);
  REQUIRE(cp.has_value());
  CHECK(cp->comparative == "more");
  CHECK(cp->option_a == "Akers");
  CHECK(cp->option_b == "Vinatieri");

  CHECK_FALSE(parse_comparison_question("What is higher, A or B?", lex).has_value());
  CHECK_FALSE(parse_comparison_question("Which was higher A or B?", lex).has_value());
  CHECK_FALSE(parse_comparison_question("Which was taller, A or B?", lex).has_value());
  CHECK_FALSE(parse_comparison_question("Which was higher, A or B", lex).has_value());
  CHECK_FALSE(parse_comparison_question("Which group grew faster?", lex).has_value());
  // the separator must ride on the comparative itself
  CHECK_FALSE(parse_comparison_question("Who had more field goals, Akers or Vinatieri?",
                                        lex)
                  .has_value());
  // two candidate comparatives are ambiguous, as is a second " or "
  CHECK_FALSE(parse_comparison_question("Which was higher, then lower: A or B?", lex)
                  .has_value());
  CHECK_FALSE(parse_comparison_question("Which was higher, A or B or C?", lex)
                  .has_value());
}

TEST_CASE("operand location uses unique mentions and nearby numerals") {
  std::string p = "There were roughly 290,000 Indians, 125,000 Bangladeshis, and 45,000 "
                  "Pakistanis in the country.";
  auto span = locate_operand(p, "Indians");
  REQUIRE(span.has_value());
  CHECK(span->surface(p) == "290,000");
  span = locate_operand(p, "Bangladeshis");
  REQUIRE(span.has_value());
  CHECK(span->surface(p) == "125,000");
  span = locate_operand(p, "Pakistanis");
  REQUIRE(span.has_value());
  CHECK(span->surface(p) == "45,000");

  CHECK_FALSE(locate_operand(p, "Germans").has_value());
  CHECK_FALSE(locate_operand("the 1944-45 season was long.", "season").has_value());
  // ambiguous mention: two occurrences
  CHECK_FALSE(locate_operand("5 cats and 6 cats.", "cats").has_value());
  // numerals in other sentences are out of scope
  CHECK_FALSE(locate_operand("It was 1910. The rebels regrouped.", "rebels").has_value());
}

TEST_CASE("year location filters to calendar years in the same sentence") {
  std::string p = "The Treaty of Karlowitz was signed in 1699. The Ottomans reclaimed "
                  "the Morea in 1715.";
  auto y = locate_year(p, "the Treaty of Karlowitz was signed");
  REQUIRE(y.has_value());
  CHECK(y->surface(p) == "1699");
  y = locate_year(p, "the Ottomans reclaim the Morea");
  REQUIRE(y.has_value());
  CHECK(y->surface(p) == "1715");
  // counts are not years
  CHECK_FALSE(locate_year("The rebels lost 250 men.", "rebels").has_value());
  CHECK_FALSE(locate_year("There were 125,000 rebels.", "rebels").has_value());
}

TEST_CASE("list-order permutes interior list elements only") {
  std::string p = "In the city, the population was spread out with 25.00% under the age "
                  "of 18, 17.10% from 18 to 24, 25.70% from 25 to 44, 19.30% from 45 to "
                  "64, and 12.90% who were 65 years of age or older.";
  QAPair qa = make_qa("How many percent were from 25 to 44?", num("25.7"), "d1");
  auto r = apply_augmentator("list-order", p, qa, cfg());
  REQUIRE(r.has_value());
  CHECK(r->question == qa.question);
  CHECK(r->answer == qa.answer);
  CHECK(r->passage != p);
  CHECK(r->query_id() == "d1:list-order");
  // lead-in and final "and" clause are anchored; the middles move
  CHECK(r->passage.rfind("In the city, ", 0) == 0);
  std::string tail = ", and 12.90% who were 65 years of age or older.";
  REQUIRE(r->passage.size() > tail.size());
  CHECK(r->passage.compare(r->passage.size() - tail.size(), tail.size(), tail) == 0);
  // same clauses, different order
  std::multiset<char> before(p.begin(), p.end()), after(r->passage.begin(), r->passage.end());
  CHECK(before == after);
  for (const char* clause :
       {"the population was spread out with 25.00% under the age of 18",
        "17.10% from 18 to 24", "25.70% from 25 to 44", "19.30% from 45 to 64"})
    CHECK(r->passage.find(clause) != std::string::npos);

  // too short a list: no match
  CHECK_FALSE(apply_augmentator("list-order", "One, two, and 3 things.", qa, cfg()).has_value());
  // list without numbers in every element: no match
  CHECK_FALSE(apply_augmentator("list-order",
                                "He ate bread, cheese, olives, and 4 figs.", qa, cfg())
                  .has_value());
}

TEST_CASE("patch-start prefixes a number sentence") {
  QAPair qa = make_qa("How many families were there?", num("7732"), "d2");
  std::string p = "As of 2000, there were 7732 families in the county.";
  auto r = apply_augmentator("patch-start", p, qa, cfg());
  REQUIRE(r.has_value());
  CHECK(r->passage == "63. As of 2000, there were 7732 families in the county.");
  CHECK(r->question == qa.question);
  CHECK(r->answer == qa.answer);

  AugmentConfig other;
  other.patch_number = 17;
  r = apply_augmentator("patch-start", p, qa, other);
  REQUIRE(r.has_value());
  CHECK(r->passage.rfind("17. ", 0) == 0);
}

TEST_CASE("patch-end appends a question entity with the patch number") {
  QAPair qa = make_qa("How many new Peso notes were presented in 1944?", num("120"), "d3");
  std::string p = "The bank issued new Peso notes after the inflation experienced in "
                  "January 1944.";
  auto r = apply_augmentator("patch-end", p, qa, cfg());
  REQUIRE(r.has_value());
  CHECK(r->passage == p + " Peso 63.");
  CHECK(r->answer == qa.answer);

  // no capitalized question entity found in the passage: no match
  QAPair qa2 = make_qa("How many notes were presented?", num("120"), "d3b");
  CHECK_FALSE(apply_augmentator("patch-end", "Nothing relevant here.", qa2, cfg()).has_value());
  // gold equal to the patch number would create a second plausible answer
  QAPair qa3 = make_qa("How many new Peso notes were presented?", num("63"), "d3c");
  CHECK_FALSE(apply_augmentator("patch-end", p, qa3, cfg()).has_value());
}

TEST_CASE("order-swap flips the comparison options") {
  QAPair qa = make_qa("Which ancestral group is smaller: English or Irish?",
                      Answer::make_span("English"), "d4");
  auto r = apply_augmentator("order-swap", "The English and Irish lived there.", qa, cfg());
  REQUIRE(r.has_value());
  CHECK(r->question == "Which ancestral group is smaller: Irish or English?");
  CHECK(r->answer == qa.answer);
  CHECK(r->passage == "The English and Irish lived there.");
}

TEST_CASE("antonym flips the comparative and the answer") {
  std::string p = "The homeowner vacancy rate was 1.9%; the rental vacancy rate was 6.7%.";
  QAPair qa = make_qa("Which was higher, the homeowner vacancy rate or rental vacancy rate?",
                      Answer::make_span("rental vacancy rate"), "d5");
  auto r = apply_augmentator("antonym", p, qa, cfg());
  REQUIRE(r.has_value());
  CHECK(r->question ==
        "Which was lower, the homeowner vacancy rate or rental vacancy rate?");
  REQUIRE(r->answer.spans.size() == 1);
  CHECK(r->answer.spans[0] == "the homeowner vacancy rate");

  SUBCASE("applying antonym twice restores the original") {
    QAPair mid = make_qa(r->question, r->answer, "d5");
    auto back = apply_augmentator("antonym", p, mid, cfg());
    REQUIRE(back.has_value());
    CHECK(back->question == qa.question);
    CHECK(back->answer == qa.answer);
  }

  SUBCASE("capitalized comparative keeps its case") {
    QAPair qb = make_qa("Which group is Smaller: English or Irish?",
                        Answer::make_span("English"), "d5b");
    auto rb = apply_augmentator("antonym", "English and Irish.", qb, cfg());
    REQUIRE(rb.has_value());
    CHECK(rb->question == "Which group is Larger: English or Irish?");
  }

  SUBCASE("gold span outside the options: no match") {
    QAPair qc = make_qa("Which was higher, A or B?", Answer::make_span("C"), "d5c");
    CHECK_FALSE(apply_augmentator("antonym", "A 1, B 2.", qc, cfg()).has_value());
  }
}

TEST_CASE("ratio-swap reflects the smaller operand and flips the answer") {
  std::string p = "There were roughly 290,000 Indians, 125,000 Bangladeshis, and 45,000 "
                  "Pakistanis in the country.";
  QAPair qa = make_qa("Which group in Bahrain is larger: Indians or Bangladeshis?",
                      Answer::make_span("Indians"), "d6");
  auto r = apply_augmentator("ratio-swap", p, qa, cfg());
  REQUIRE(r.has_value());
  CHECK(r->passage == "There were roughly 290,000 Indians, 455,000 Bangladeshis, and "
                      "45,000 Pakistanis in the country.");
  REQUIRE(r->answer.spans.size() == 1);
  CHECK(r->answer.spans[0] == "Bangladeshis");
  CHECK(r->question == qa.question);

  // the rewritten count strictly exceeds the untouched one
  auto nums = extract_numbers(r->passage);
  REQUIRE(nums.size() >= 2);
  CHECK(nums[1].value == Decimal::integer(455000));
  CHECK(nums[1].value > nums[0].value);
}

TEST_CASE("compl-percent toggles the negation and complements the answer") {
  std::string p = "As of the census, 98.97% of the population were not African American.";
  QAPair qa = make_qa("How many percent of people were not African American?",
                      num("98.97"), "d7");
  auto r = apply_augmentator("compl-percent", p, qa, cfg());
  REQUIRE(r.has_value());
  CHECK(r->question == "How many percent of people were African American?");
  CHECK(r->answer.number == "1.03");
  CHECK(r->passage == p);

  SUBCASE("involution returns the original question and answer") {
    QAPair mid = make_qa(r->question, r->answer, "d7");
    auto back = apply_augmentator("compl-percent", p, mid, cfg());
    REQUIRE(back.has_value());
    CHECK(back->question == qa.question);
    CHECK(back->answer.number == "98.97");
  }

  SUBCASE("complement and original sum to exactly one hundred") {
    auto a = parse_number(qa.answer.number)->value;
    auto b = parse_number(r->answer.number)->value;
    CHECK(a + b == Decimal::integer(100));
  }

  SUBCASE("written decimal style carries over") {
    QAPair q50 = make_qa("How many percent were not old?", num("50.00"), "d7b");
    auto r50 = apply_augmentator("compl-percent", p, q50, cfg());
    REQUIRE(r50.has_value());
    CHECK(r50->answer.number == "50.00");
    QAPair q25 = make_qa("How many percent were not old?", num("25"), "d7c");
    auto r25 = apply_augmentator("compl-percent", p, q25, cfg());
    REQUIRE(r25.has_value());
    CHECK(r25->answer.number == "75");
  }

  SUBCASE("questions without a percent or with double negation: no match") {
    QAPair qx = make_qa("How many people were not counted?", num("10"), "d7d");
    CHECK_FALSE(apply_augmentator("compl-percent", p, qx, cfg()).has_value());
    QAPair qy = make_qa("How many percent were not young and were not old?",
                        num("10"), "d7e");
    CHECK_FALSE(apply_augmentator("compl-percent", p, qy, cfg()).has_value());
  }
}

TEST_CASE("diff-to-sum rewrites the difference question into a sum") {
  std::string p = "The city has 39 masjids and 34 Buddhist temples.";
  QAPair qa = make_qa("How many more masjids are there compared to Buddhist temples?",
                      num("5"), "d8");
  auto r = apply_augmentator("diff-to-sum", p, qa, cfg());
  REQUIRE(r.has_value());
  CHECK(r->question == "How many masjids and Buddhist temples are there?");
  CHECK(r->answer.number == "73");
  CHECK(r->passage == p);

  // sum + diff == 2 * max
  auto sum = parse_number(r->answer.number)->value;
  auto diff = parse_number(qa.answer.number)->value;
  CHECK(sum + diff == Decimal::integer(39).times(2));

  // a wrong gold difference disables the rewrite
  QAPair bad = make_qa(qa.question, num("6"), "d8b");
  CHECK_FALSE(apply_augmentator("diff-to-sum", p, bad, cfg()).has_value());
}

TEST_CASE("how-many-more-max asks for the larger operand") {
  std::string p = "The county registered 11,959 Democratic voters and 7,477 Republican "
                  "voters that year.";
  QAPair qa = make_qa("How many more Democratic voters are there than Republican?",
                      num("4,482"), "d9");
  auto r = apply_augmentator("how-many-more-max", p, qa, cfg());
  REQUIRE(r.has_value());
  CHECK(r->question == "How many Democratic voters are there?");
  CHECK(r->answer.number == "11,959");
  CHECK(r->passage == p);

  // zero difference never matches
  QAPair tie = make_qa("How many more cats are there than dogs?", num("0"), "d9b");
  CHECK_FALSE(apply_augmentator("how-many-more-max", "3 cats and 3 dogs.", tie, cfg())
                  .has_value());
}

TEST_CASE("how-many-longer asks for the longer measure") {
  std::string p = "Rian Lindell's longest field goal went for 28 yards, while his "
                  "shortest field goal was 22 yards.";
  QAPair qa = make_qa(
      "How many yards longer was Rian Lindell's longest field goal than his shortest "
      "field goal?",
      num("6"), "d10");
  auto r = apply_augmentator("how-many-longer", p, qa, cfg());
  REQUIRE(r.has_value());
  CHECK(r->question == "How many yards was Rian Lindell's longest field goal?");
  CHECK(r->answer.number == "28");
  CHECK(r->passage == p);
}

TEST_CASE("how-many-after asks when the later event happened") {
  std::string p = "The Treaty of Karlowitz was signed in 1699. The Ottomans reclaimed "
                  "the Morea in 1715.";
  QAPair qa = make_qa(
      "How many years after the Treaty of Karlowitz was signed did the Ottomans reclaim "
      "the Morea?",
      num("16"), "d11");
  auto r = apply_augmentator("how-many-after", p, qa, cfg());
  REQUIRE(r.has_value());
  CHECK(r->question == "When did the Ottomans reclaim the Morea?");
  CHECK(r->answer.number == "1715");
  CHECK(r->passage == p);

  // mismatched year gap: no rewrite
  QAPair bad = make_qa(qa.question, num("15"), "d11b");
  CHECK_FALSE(apply_augmentator("how-many-after", p, bad, cfg()).has_value());
}

TEST_CASE("range rewrites every passage number but keeps span answers") {
  std::string p = "The English numbered 12,500 and the Irish 8,300 in the 1901 census.";
  QAPair qa = make_qa("Which ancestral group is smaller: English or Irish?",
                      Answer::make_span("Irish"), "d12");
  auto r = apply_augmentator("range", p, qa, cfg());
  REQUIRE(r.has_value());
  CHECK(r->answer == qa.answer);
  CHECK(r->question == qa.question);
  CHECK(r->passage == "The English numbered 13,500 and the Irish 9,300 in the 2901 census.");

  AugmentConfig mul;
  mul.range_mode = RangeMode::Multiply;
  auto rm = apply_augmentator("range", p, qa, mul);
  REQUIRE(rm.has_value());
  CHECK(rm->passage == "The English numbered 25,000 and the Irish 16,600 in the 3802 census.");

  // superlative wording also qualifies
  QAPair sup = make_qa("Which group had the highest population?",
                       Answer::make_span("English"), "d12b");
  CHECK(apply_augmentator("range", p, sup, cfg()).has_value());

  // number answers and digit-bearing spans must not pass
  QAPair narrow = make_qa("Which ancestral group is smaller: English or Irish?",
                          num("8,300"), "d12c");
  CHECK_FALSE(apply_augmentator("range", p, narrow, cfg()).has_value());
  QAPair digity = make_qa("Which group had the highest population?",
                          Answer::make_span("the 1901 English"), "d12d");
  CHECK_FALSE(apply_augmentator("range", p, digity, cfg()).has_value());
}

TEST_CASE("composition pipes augmentators left to right") {
  std::string p = "The homeowner vacancy rate was 1.9%; the rental vacancy rate was 6.7%.";
  QAPair qa = make_qa("Which was higher, the homeowner vacancy rate or rental vacancy rate?",
                      Answer::make_span("rental vacancy rate"), "d13");
  auto r = apply_augmentator("antonym+order-swap", p, qa, cfg());
  REQUIRE(r.has_value());
  CHECK(r->question ==
        "Which was lower, rental vacancy rate or the homeowner vacancy rate?");
  REQUIRE(r->answer.spans.size() == 1);
  CHECK(r->answer.spans[0] == "the homeowner vacancy rate");
  CHECK(r->query_id() == "d13:antonym+order-swap");

  // if any stage fails the whole pipeline fails
  QAPair plain = make_qa("How many rates were there?", num("2"), "d13b");
  CHECK_FALSE(apply_augmentator("antonym+order-swap", p, plain, cfg()).has_value());
}

TEST_CASE("unknown augmentator names throw") {
  QAPair qa = make_qa("How many?", num("1"), "x");
  CHECK_THROWS_AS(apply_augmentator("no-such-rule", "p.", qa, cfg()), UnknownAugmentator);
  CHECK_THROWS_AS(apply_augmentator("antonym+", "p.", qa, cfg()), UnknownAugmentator);
  CHECK_THROWS_AS(apply_augmentator("", "p.", qa, cfg()), UnknownAugmentator);
}

TEST_CASE("augmentator catalog") {
  CHECK(augmentator_names().size() == 12);
  auto defaults = default_augmentator_names();
  CHECK(defaults.size() == 13);
  CHECK(defaults.back() == "antonym+order-swap");
  for (const char* name :
       {"list-order", "patch-start", "patch-end", "order-swap", "antonym", "ratio-swap",
        "compl-percent", "diff-to-sum", "how-many-more-max", "how-many-longer",
        "how-many-after", "range"})
    CHECK(std::find(defaults.begin(), defaults.end(), name) != defaults.end());
}

TEST_CASE("list-order permutation is deterministic per seed and example") {
  std::string p = "With totals of 11 cats, 22 dogs, 33 birds, 44 fish, and 55 mice.";
  QAPair qa = make_qa("How many dogs?", num("22"), "same-id");
  auto a = apply_augmentator("list-order", p, qa, cfg());
  auto b = apply_augmentator("list-order", p, qa, cfg());
  REQUIRE(a.has_value());
  REQUIRE(b.has_value());
  CHECK(a->passage == b->passage);

  AugmentConfig seeded;
  seeded.seed = 1;
  int differs = 0;
  for (int id = 0; id < 12; ++id) {
    QAPair q2 = make_qa(qa.question, qa.answer, "id-" + std::to_string(id));
    auto x = apply_augmentator("list-order", p, q2, cfg());
    auto y = apply_augmentator("list-order", p, q2, seeded);
    REQUIRE(x.has_value());
    REQUIRE(y.has_value());
    differs += x->passage != y->passage;
  }
  CHECK(differs > 0);
}

TEST_CASE("augment_dataset groups rewritten examples and counts per name") {
  DropDataset ds;
  {
    PassageEntry entry;
    entry.passage = "As of the census, 98.97% of the population were not African American.";
    entry.qa_pairs.push_back(make_qa("How many percent of people were not African American?",
                                     num("98.97"), "p1-q1"));
    ds.add("p1", std::move(entry));
  }
  {
    PassageEntry entry;
    entry.passage = "The city has 39 masjids and 34 Buddhist temples.";
    entry.qa_pairs.push_back(make_qa(
        "How many more masjids are there compared to Buddhist temples?", num("5"), "p2-q1"));
    ds.add("p2", std::move(entry));
  }

  auto [out, stats] = augment_dataset(ds, {"compl-percent", "diff-to-sum", "patch-start"}, cfg());
  CHECK(stats.at("compl-percent") == 1);
  CHECK(stats.at("diff-to-sum") == 1);
  CHECK(stats.at("patch-start") == 2);
  CHECK(out.passage_count() == 4);
  CHECK(out.qa_count() == 4);

  bool found = false;
  for (const auto& [pid, entry] : out.entries()) {
    if (pid == "p1-q1:compl-percent") {
      found = true;
      REQUIRE(entry.qa_pairs.size() == 1);
      CHECK(entry.qa_pairs[0].query_id == "p1-q1:compl-percent");
      CHECK(entry.qa_pairs[0].answer.number == "1.03");
    }
  }
  CHECK(found);

  // rerunning yields identical serialized output
  auto [out2, stats2] = augment_dataset(ds, {"compl-percent", "diff-to-sum", "patch-start"}, cfg());
  CHECK(out.dumps() == out2.dumps());
  CHECK(stats == stats2);
}

TEST_CASE("antonym involution over generated comparisons") {
  AntonymLexicon lex = AntonymLexicon::builtin();
  const char* comparatives[] = {"higher", "larger", "more",   "longer",
                                "older",  "greater", "faster", "heavier"};
  const char* nouns[] = {"Indians", "Germans", "Poles",  "Swedes",
                         "Danes",   "Finns",   "Czechs", "Slovaks"};
  std::mt19937_64 gen(99);
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    std::string comp = comparatives[gen() % 8];
    std::string a = nouns[gen() % 8];
    std::string b = nouns[gen() % 8];
    if (a == b) continue;
    std::string q = "Which group was " + comp + ", " + a + " or " + b + "?";
    QAPair qa = make_qa(q, Answer::make_span(gen() % 2 ? a : b),
                        "inv-" + std::to_string(i));
    auto once = apply_augmentator("antonym", "Unused passage.", qa, cfg());
    REQUIRE(once.has_value());
    QAPair mid = make_qa(once->question, once->answer, qa.query_id);
    auto twice = apply_augmentator("antonym", "Unused passage.", mid, cfg());
    REQUIRE(twice.has_value());
    CHECK(twice->question == qa.question);
    CHECK(twice->answer == qa.answer);
    ++checked;
  }
  CHECK(checked > 200);
}

TEST_CASE("compl-percent involution over generated percents") {
  std::mt19937_64 gen(7);
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    int units = 1 + static_cast<int>(gen() % 9999);  // (0, 100) at two decimals
    Decimal v = Decimal::from_units(units, 2);
    int decimals = static_cast<int>(gen() % 3);
    if (decimals < 2) v = Decimal::from_units(units - units % (decimals ? 10 : 100), 2);
    if (v.is_zero()) continue;
    std::string q = "How many percent of plots were not surveyed?";
    QAPair qa = make_qa(q, num(render_like(v, decimals, false).c_str()),
                        "cp-" + std::to_string(i));
    auto once = apply_augmentator("compl-percent", "p.", qa, cfg());
    REQUIRE(once.has_value());
    CHECK(once->question == "How many percent of plots were surveyed?");
    QAPair mid = make_qa(once->question, once->answer, qa.query_id);
    auto twice = apply_augmentator("compl-percent", "p.", mid, cfg());
    REQUIRE(twice.has_value());
    CHECK(twice->question == qa.question);
    CHECK(twice->answer.number == qa.answer.number);
    auto s = parse_number(once->answer.number);
    REQUIRE(s.has_value());
    CHECK(s->value + parse_number(qa.answer.number)->value == Decimal::integer(100));
    ++checked;
  }
  CHECK(checked > 250);
}

TEST_CASE("shallow rewrites preserve gold answers end to end") {
  DropDataset ds;
  PassageEntry entry;
  entry.passage = "With totals of 11 cats, 22 dogs, 33 birds, 44 fish, and 55 mice. "
                  "As of 2000, the Shelter fed them.";
  entry.qa_pairs.push_back(make_qa("How many dogs did the Shelter feed?", num("22"), "s1"));
  ds.add("s", std::move(entry));
  auto [out, stats] = augment_dataset(ds, {"list-order", "patch-start", "patch-end"}, cfg());
  CHECK(out.qa_count() == 3);
  for (const auto& [pid, e] : out.entries()) {
    REQUIRE(e.qa_pairs.size() == 1);
    CHECK(e.qa_pairs[0].answer.number == "22");
  }
}
