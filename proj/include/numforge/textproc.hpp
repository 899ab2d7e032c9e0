#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "numforge/rng.hpp"

namespace numforge::textproc {

using ordered_json = nlohmann::ordered_json;

inline const std::string kMaskToken = "[MASK]";

// A wordpiece-style token; continuations render with a "##" prefix.
struct Token {
  std::string text;  // stored without the "##" prefix
  bool continuation = false;

  bool operator==(const Token& o) const = default;

  std::string rendered() const { return continuation ? "##" + text : text; }
  static Token from_rendered(std::string_view piece);
};

std::vector<Token> tokens_from_rendered(const std::vector<std::string>& pieces);
std::vector<std::string> tokens_to_rendered(const std::vector<Token>& tokens);

// Splits whitespace-delimited words (no wordpiece vocabulary involved).
std::vector<Token> whitespace_tokenize(const std::string& text);

// Every all-digit token of length >= 2 becomes one token per digit; the
// first inherits the continuation flag, the rest are continuations.
// Idempotent; non-digit and mixed tokens pass through.
std::vector<Token> digit_tokenize(const std::vector<Token>& tokens);

// Joins tokens with spaces, attaching continuations without a space.
// detokenize(digit_tokenize(t)) == detokenize(t).
std::string detokenize(const std::vector<Token>& tokens);

class LengthExceeded : public std::runtime_error {
 public:
  explicit LengthExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct ShiftResult {
  int offset = 0;
  std::vector<int> position_ids;  // offset .. offset + n_total - 1
};

// Uniform position-id shift: offset drawn from {0, ..., max_len - n_total}.
ShiftResult random_shift(int n_total, Rng& rng, int max_len = 512);

struct MaskedSample {
  std::vector<Token> tokens;          // after replacement
  std::vector<int> mask_positions;    // sorted ascending, unique
  std::map<int, Token> originals;     // position -> pre-mask token

  // The input sequence with originals restored.
  std::vector<Token> restored() const;

  ordered_json to_json() const;
  static MaskedSample from_json(const ordered_json& j);
};

struct MlmConfig {
  double mask_p = 0.15;
  int max_masks = 65;
  int max_len = 512;
  // 80% mask token / 10% random token / 10% unchanged.
  double replace_mask_p = 0.8;
  double replace_random_p = 0.1;
};

// Masks each position independently with probability mask_p; if more than
// max_masks are selected a uniform subset survives. Random replacements are
// drawn from the sample's own tokens.
MaskedSample mlm_mask(const std::vector<Token>& tokens, Rng& rng, const MlmConfig& config = {});

// True iff the paragraph holds >= min_numbers digit-bearing whitespace tokens.
bool mlm_filter_paragraph(const std::string& text, int min_numbers = 15);

// Appendix-style page-title filter: keeps titles containing any keyword.
const std::set<std::string>& default_title_keywords();
bool title_matches_keywords(const std::string& title,
                            const std::set<std::string>& keywords = default_title_keywords());

}  // namespace numforge::textproc
