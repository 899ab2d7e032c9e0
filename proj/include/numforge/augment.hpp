#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "numforge/answer.hpp"
#include "numforge/decimal.hpp"

namespace numforge::aug {

// A numeral located in running text. `end` is past-the-end; spans from
// extract_numbers are non-overlapping and ascending.
struct NumberSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
  Decimal value;
  int decimals = 0;
  bool grouped = false;

  std::string surface(const std::string& text) const {
    return text.substr(begin, end - begin);
  }
};

std::vector<NumberSpan> extract_numbers(const std::string& text);

// Renders `value` in the style of an existing numeral: `decimals`
// fractional digits, thousands commas if `grouped`.
std::string render_like(const Decimal& value, int decimals, bool grouped);

// Bidirectional comparative -> antonym map. Every entry is symmetric, so
// antonym(antonym(w)) == w for all mapped words.
class AntonymLexicon {
 public:
  static AntonymLexicon builtin();

  // Registers both directions; throws std::invalid_argument if either word
  // is already mapped to something else.
  void add_pair(const std::string& a, const std::string& b);
  // One pair per line, "word|antonym". '#' starts a comment line.
  void load_lines(const std::string& text);

  std::optional<std::string> antonym(const std::string& word) const;
  bool contains(const std::string& word) const { return map_.count(word) != 0; }
  std::size_t word_count() const { return map_.size(); }

 private:
  std::map<std::string, std::string> map_;
};

// "Which was higher, the homeowner vacancy rate or rental vacancy rate?"
// -> comparative "higher", options "the homeowner vacancy rate" /
// "rental vacancy rate", stem "Which was higher, ".
struct ComparisonParse {
  std::string comparative;
  std::string option_a;
  std::string option_b;
  std::string stem;                    // up to and including the separator + space
  std::size_t comparative_begin = 0;   // byte offset of the comparative
};

std::optional<ComparisonParse> parse_comparison_question(
    const std::string& question, const AntonymLexicon& lexicon);

// Finds the number correlated with an entity mention: longest entity
// n-gram that occurs exactly once in the passage, then the nearest numeral
// within ten tokens of the match and inside the same sentence. Ties at
// equal distance prefer the preceding numeral ("290,000 Indians"); an
// unresolved tie returns nullopt.
std::optional<NumberSpan> locate_operand(const std::string& passage,
                                         const std::string& entity);
// Same, but only candidates that look like calendar years (integers in
// [1000, 2100] written without commas or decimals).
std::optional<NumberSpan> locate_year(const std::string& passage,
                                      const std::string& entity);

enum class RangeMode { Add, Multiply };

struct AugmentConfig {
  std::uint64_t seed = 0;
  std::int64_t patch_number = 63;
  RangeMode range_mode = RangeMode::Add;
  std::int64_t range_addend = 1000;
  std::int64_t range_factor = 2;
  AntonymLexicon lexicon = AntonymLexicon::builtin();
};

struct AugmentedExample {
  std::string origin_query_id;
  std::string augmentator;
  std::string passage;
  std::string question;
  Answer answer;

  std::string query_id() const { return origin_query_id + ":" + augmentator; }
};

class UnknownAugmentator : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The twelve single augmentators, in canonical order.
const std::vector<std::string>& augmentator_names();
// The twelve plus the shipped composition "antonym+order-swap".
std::vector<std::string> default_augmentator_names();

// Applies one augmentator (or a '+'-joined pipeline, left to right) to a
// QA pair. Returns nullopt when the example does not match the rule's
// pattern or the rewrite would be ambiguous. Throws UnknownAugmentator.
std::optional<AugmentedExample> apply_augmentator(const std::string& name,
                                                  const std::string& passage,
                                                  const QAPair& qa,
                                                  const AugmentConfig& config);

using AugmentStats = std::map<std::string, std::size_t>;

// Runs every named augmentator over every QA pair. Each generated example
// becomes its own passage entry (augmentators may edit the passage
// per-question); query ids are "<origin>:<name>". Deterministic for a
// fixed (dataset, names, config.seed).
std::pair<DropDataset, AugmentStats> augment_dataset(
    const DropDataset& dataset, const std::vector<std::string>& names,
    const AugmentConfig& config);

}  // namespace numforge::aug
