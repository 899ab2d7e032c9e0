#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "numforge/answer.hpp"
#include "numforge/date.hpp"
#include "numforge/decimal.hpp"
#include "numforge/rng.hpp"

namespace numforge::nd {

enum class Split { TRAIN, DEV };

const std::string& split_name(Split s);
std::optional<Split> split_from_name(std::string_view name);

// The six numerical template families.
enum class Kind {
  SIGNED_COMBO,      // "517.4 - 17484 - 10071.75 + 1013.21"
  SUPERLATIVE_AVG,   // "largest(13.42, 115.5, 72.76)"
  ARG_SUPERLATIVE,   // "argmin(highish 137.1, sightliness 43.2)"
  DATE_SUPERLATIVE,  // "oldest(June 04, 959; 01 May 959)"
  DATE_DIFF,         // "diff in days(05 April 112; June 01, 112)"
  PERCENTAGE,        // "percent not sunbird :: sunbird 33.2%, defector 60.77%, molehill 6.03%"
};
inline constexpr int kKindCount = 6;

const std::string& kind_name(Kind k);  // hyphenated lowercase, CLI-facing
std::optional<Kind> kind_from_name(std::string_view name);
const std::vector<Kind>& all_kinds();

struct NdExample {
  Kind kind = Kind::SIGNED_COMBO;
  Split split = Split::TRAIN;
  std::string surface;
  Answer answer;
};

ordered_json nd_to_json(const NdExample& ex);
NdExample nd_from_json(const ordered_json& j);

// Disjoint train/dev partition of {0..max_value} via a keyed hash, so the
// split is stable for a given seed without materializing the universe.
class NumberPool {
 public:
  NumberPool(std::uint64_t seed, double dev_fraction = 0.1, std::int64_t max_value = 20000);

  Split split_of(std::int64_t n) const;
  std::int64_t max_value() const { return max_value_; }

  // Uniform over the pool members of `split`, by rejection.
  std::int64_t sample(Split split, Rng& rng) const;
  // Same, restricted to [lo, hi] within the universe.
  std::int64_t sample_in_range(Split split, std::int64_t lo, std::int64_t hi, Rng& rng) const;

 private:
  std::uint64_t seed_;
  double dev_fraction_;
  std::int64_t max_value_;
};

class NdParseError : public std::runtime_error {
 public:
  explicit NdParseError(const std::string& what) : std::runtime_error(what) {}
};

enum class DateUnit { DAYS, MONTHS, YEARS };

// Absolute difference in whole units; days exact, months/years reduced by
// one when the later partial period has not completed.
std::int64_t date_difference(const DateValue& a, const DateValue& b, DateUnit unit);

// k >= 2 percentages summing to 100 before rounding (flat Dirichlet over the
// simplex), each rounded half-to-even to two decimals, each in (0, 100).
// After rounding the sum may drift from 100 by up to half a unit per share.
std::vector<Decimal> sample_dirichlet_split(int k, Rng& rng);

// Independent verifier: re-parses a surface of the given kind and evaluates
// it with exact decimal / calendar arithmetic. Percentage answers use the
// displayed rounded values. Throws NdParseError on nonconforming input.
Answer nd_oracle(const std::string& surface, Kind kind);

struct NdConfig {
  std::uint64_t seed = 0;
  double dev_fraction = 0.1;
  std::int64_t pool_max = 20000;
  // Word source for ARG_SUPERLATIVE / PERCENTAGE surfaces; empty = bundled list.
  std::vector<std::string> words;
};

class NdGenerator {
 public:
  explicit NdGenerator(NdConfig config);

  // Deterministic in (config.seed, index): randomness comes from a stream
  // derived as hash(seed, "nd", index), so parallel and sequential runs
  // produce identical examples. With no kind given, kinds cycle by index.
  NdExample generate(std::uint64_t index, Split split,
                     std::optional<Kind> kind = std::nullopt) const;

  const NumberPool& pool() const { return pool_; }
  const std::vector<std::string>& words() const { return words_; }

 private:
  Decimal sample_float(Split split, Rng& rng) const;
  DateValue sample_date(Split split, Rng& rng) const;

  NdConfig config_;
  NumberPool pool_;
  std::vector<std::string> words_;
};

}  // namespace numforge::nd
