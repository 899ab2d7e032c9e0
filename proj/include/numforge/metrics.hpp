#pragma once

#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "numforge/answer.hpp"

namespace numforge::metrics {

// Full-token numeral in canonical form: no leading zeros, no trailing
// fractional zeros, no trailing '.', never "-0". Two numerals are equal in
// value iff their canonical strings are equal. Returns nullopt for
// non-numeric tokens.
std::optional<std::string> canonical_number(const std::string& token);

// Scoring normalization: lowercase, split on whitespace and hyphens,
// drop articles, strip punctuation except digit-internal '.', remove
// digit-grouping commas, canonicalize numeric tokens.
std::vector<std::string> normalize_answer(const std::string& text);

// Exact match is set equality of normalized spans. F1 aligns pred and gold
// spans one to one, maximizing the mean per-pair token F1; a pair whose
// gold contains numbers scores 0 unless a numeric token matches by value.
std::pair<int, double> score_pair(const Answer& pred, const Answer& gold);

struct GroupScore {
  std::size_t count = 0;
  double em_sum = 0.0;
  double f1_sum = 0.0;

  double em() const { return count == 0 ? 0.0 : 100.0 * em_sum / count; }
  double f1() const { return count == 0 ? 0.0 : 100.0 * f1_sum / count; }
};

enum class GroupBy { None, AnswerType, Augmentator, All };

struct EvalReport {
  GroupScore overall;
  // keys: "number", "span", "spans", "date"
  std::map<std::string, GroupScore> by_type;
  // key "original" for plain query ids, else the ":<name>" suffix
  std::map<std::string, GroupScore> by_augmentator;
  // per-augmentator EM minus the "original" group EM
  std::map<std::string, double> augmentator_diff;
  std::vector<std::string> missing;

  ordered_json to_json() const;
  std::string table() const;
};

// "number" / "span" / "spans" / "date" for breakdown grouping.
std::string answer_type_name(const Answer& answer);

EvalReport evaluate(const DropDataset& gold,
                    const std::map<std::string, Answer>& predictions,
                    GroupBy group_by = GroupBy::All);

// One JSON object per line: {"query_id": ..., "answer": ...} where the
// answer is either a DROP answer object or a bare string/number.
std::map<std::string, Answer> read_predictions(std::istream& in);

}  // namespace numforge::metrics
