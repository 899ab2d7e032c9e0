#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "numforge/textproc.hpp"

using namespace numforge;
using namespace numforge::textproc;

namespace {

std::vector<Token> toks(std::initializer_list<const char*> pieces) {
  std::vector<Token> out;
  for (const char* p : pieces) out.push_back(Token::from_rendered(p));
  return out;
}

std::vector<Token> random_sequence(Rng& rng) {
  static const std::vector<std::string> words = {"the",  "army",  "of",    "1086",
                                                 "men",  "343.8", "55",    "marched",
                                                 "##s",  "2",     "##411", "x9y"};
  std::vector<Token> out;
  int n = static_cast<int>(rng.range(1, 40));
  for (int i = 0; i < n; ++i) out.push_back(Token::from_rendered(rng.pick(words)));
  return out;
}

}  // namespace

TEST_CASE("digit tokenization splits all-digit tokens only") {
  CHECK(tokens_to_rendered(digit_tokenize(toks({"1086"}))) ==
        std::vector<std::string>{"1", "##0", "##8", "##6"});
  CHECK(tokens_to_rendered(digit_tokenize(toks({"abc"}))) == std::vector<std::string>{"abc"});
  CHECK(tokens_to_rendered(digit_tokenize(toks({"##54"}))) ==
        std::vector<std::string>{"##5", "##4"});
  CHECK(tokens_to_rendered(digit_tokenize(toks({"343", "##8"}))) ==
        std::vector<std::string>{"3", "##4", "##3", "##8"});
  CHECK(tokens_to_rendered(digit_tokenize(toks({"4,482"}))) == std::vector<std::string>{"4,482"});
  CHECK(tokens_to_rendered(digit_tokenize(toks({"x9y"}))) == std::vector<std::string>{"x9y"});
  CHECK(tokens_to_rendered(digit_tokenize(toks({"7"}))) == std::vector<std::string>{"7"});
  CHECK(digit_tokenize({}).empty());
}

TEST_CASE("digit tokenization is idempotent and preserves text") {
  Rng rng(404);
  for (int rep = 0; rep < 10000; ++rep) {
    std::vector<Token> t = random_sequence(rng);
    std::vector<Token> once = digit_tokenize(t);
    CHECK(digit_tokenize(once) == once);
    CHECK(detokenize(once) == detokenize(t));
    std::size_t extra = 0;
    for (const Token& tok : t) {
      bool digits = !tok.text.empty() &&
                    std::all_of(tok.text.begin(), tok.text.end(),
                                [](unsigned char c) { return isdigit(c) != 0; });
      if (digits && tok.text.size() >= 2) extra += tok.text.size() - 1;
    }
    CHECK(once.size() == t.size() + extra);
  }
}

TEST_CASE("detokenize join rules") {
  CHECK(detokenize(toks({"1", "##0", "##8", "##6"})) == "1086");
  CHECK(detokenize({}) == "");
  CHECK(detokenize(toks({"a", "##b", "c"})) == "ab c");
  CHECK(detokenize(toks({"##a"})) == "a");
}

TEST_CASE("whitespace tokenization") {
  auto t = whitespace_tokenize("  the army\tof 1086\nmen ");
  CHECK(tokens_to_rendered(t) == std::vector<std::string>{"the", "army", "of", "1086", "men"});
  CHECK(whitespace_tokenize("").empty());
  CHECK(whitespace_tokenize("   ").empty());
}

TEST_CASE("rendered round-trip keeps continuation flags") {
  Rng rng(405);
  for (int rep = 0; rep < 500; ++rep) {
    std::vector<Token> t = random_sequence(rng);
    CHECK(tokens_from_rendered(tokens_to_rendered(t)) == t);
  }
}

TEST_CASE("random shift stays inside the position budget") {
  Rng rng(406);
  SUBCASE("full-length input forces offset zero") {
    for (int i = 0; i < 50; ++i) {
      ShiftResult r = random_shift(512, rng);
      CHECK(r.offset == 0);
      CHECK(r.position_ids.front() == 0);
      CHECK(r.position_ids.back() == 511);
    }
  }
  SUBCASE("near-full input enumerates the whole small range") {
    std::set<int> seen;
    for (int i = 0; i < 400; ++i) {
      ShiftResult r = random_shift(509, rng);
      CHECK(r.offset >= 0);
      CHECK(r.offset <= 3);
      CHECK(r.position_ids.back() < 512);
      seen.insert(r.offset);
    }
    CHECK(seen == std::set<int>{0, 1, 2, 3});
  }
  SUBCASE("ids are consecutive from the offset") {
    for (int i = 0; i < 200; ++i) {
      int n = static_cast<int>(rng.range(1, 512));
      ShiftResult r = random_shift(n, rng);
      REQUIRE(static_cast<int>(r.position_ids.size()) == n);
      for (int k = 0; k < n; ++k) {
        CHECK(r.position_ids[k] == r.offset + k);
        CHECK(r.position_ids[k] < 512);
      }
    }
  }
  SUBCASE("window override") {
    ShiftResult r = random_shift(10, rng, 10);
    CHECK(r.offset == 0);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(random_shift(513, rng), LengthExceeded);
    CHECK_THROWS(random_shift(0, rng));
  }
}

TEST_CASE("masking restores originals and respects the cap") {
  Rng rng(407);
  std::vector<Token> input;
  for (int i = 0; i < 512; ++i) input.push_back(Token{"w" + std::to_string(i), false});
  for (int rep = 0; rep < 300; ++rep) {
    MaskedSample s = mlm_mask(input, rng);
    CHECK(s.mask_positions.size() <= 65);
    CHECK(std::is_sorted(s.mask_positions.begin(), s.mask_positions.end()));
    CHECK(std::adjacent_find(s.mask_positions.begin(), s.mask_positions.end()) ==
          s.mask_positions.end());
    CHECK(s.restored() == input);
    CHECK(s.mask_positions.size() == s.originals.size());
    for (int pos : s.mask_positions) {
      CHECK(pos >= 0);
      CHECK(pos < 512);
      CHECK(s.originals.count(pos) == 1);
    }
    // untouched positions keep their token
    std::set<int> masked(s.mask_positions.begin(), s.mask_positions.end());
    for (int i = 0; i < 512; ++i)
      if (!masked.count(i)) CHECK(s.tokens[i] == input[i]);
  }
}

TEST_CASE("masking hits the configured rate and replacement mix") {
  Rng rng(408);
  std::vector<Token> input;
  for (int i = 0; i < 100; ++i) input.push_back(Token{"tok" + std::to_string(i), false});
  std::int64_t selected = 0, total = 0, as_mask = 0, unchanged = 0, random_swap = 0;
  for (int rep = 0; rep < 2000; ++rep) {
    MaskedSample s = mlm_mask(input, rng);
    selected += static_cast<std::int64_t>(s.mask_positions.size());
    total += 100;
    for (int pos : s.mask_positions) {
      if (s.tokens[pos].text == kMaskToken)
        ++as_mask;
      else if (s.tokens[pos] == input[pos])
        ++unchanged;
      else
        ++random_swap;
    }
  }
  double rate = static_cast<double>(selected) / static_cast<double>(total);
  CHECK(rate > 0.14);
  CHECK(rate < 0.16);
  double mask_share = static_cast<double>(as_mask) / static_cast<double>(selected);
  double keep_share = static_cast<double>(unchanged) / static_cast<double>(selected);
  double swap_share = static_cast<double>(random_swap) / static_cast<double>(selected);
  CHECK(mask_share > 0.77);
  CHECK(mask_share < 0.83);
  CHECK(keep_share > 0.07);
  CHECK(keep_share < 0.13);
  CHECK(swap_share > 0.07);
  CHECK(swap_share < 0.13);
}

TEST_CASE("masking edge cases") {
  Rng rng(409);
  MaskedSample empty = mlm_mask({}, rng);
  CHECK(empty.tokens.empty());
  CHECK(empty.mask_positions.empty());

  std::vector<Token> over(513, Token{"x", false});
  CHECK_THROWS_AS(mlm_mask(over, rng), LengthExceeded);

  MlmConfig all;
  all.mask_p = 1.0;
  std::vector<Token> ten(10, Token{"y", false});
  MaskedSample s = mlm_mask(ten, rng, all);
  CHECK(s.mask_positions.size() == 10);

  all.max_masks = 4;
  s = mlm_mask(ten, rng, all);
  CHECK(s.mask_positions.size() == 4);
  CHECK(s.restored() == ten);
}

TEST_CASE("masked samples round-trip through json") {
  Rng rng(410);
  for (int rep = 0; rep < 50; ++rep) {
    std::vector<Token> t = random_sequence(rng);
    MaskedSample s = mlm_mask(t, rng);
    MaskedSample back = MaskedSample::from_json(s.to_json());
    CHECK(back.tokens == s.tokens);
    CHECK(back.mask_positions == s.mask_positions);
    CHECK(back.originals == s.originals);
  }
}

TEST_CASE("paragraph number filter applies a strict threshold") {
  std::string fourteen, fifteen;
  for (int i = 0; i < 14; ++i) fourteen += std::to_string(i) + " filler ";
  fifteen = fourteen + "15";
  CHECK_FALSE(mlm_filter_paragraph(fourteen));
  CHECK(mlm_filter_paragraph(fifteen));
  CHECK_FALSE(mlm_filter_paragraph(""));
  CHECK_FALSE(mlm_filter_paragraph("no numbers at all"));
  CHECK(mlm_filter_paragraph("y1 y2 y3 y4 y5 y6 y7 y8 y9 y10 y11 y12 y13 y14 y15"));
  CHECK(mlm_filter_paragraph("1 2 3", 3));
}

TEST_CASE("title keyword filter") {
  CHECK(!default_title_keywords().empty());
  CHECK(title_matches_keywords("Battle of Hastings"));
  CHECK(title_matches_keywords("2007 Texas Longhorns football season"));
  CHECK(title_matches_keywords("Economy of Chile"));
  CHECK_FALSE(title_matches_keywords("Sourdough bread"));
  CHECK(title_matches_keywords("anything", {"anything"}));
  CHECK_FALSE(title_matches_keywords("anything", {"else"}));
}
