#include "numforge/textproc.hpp"

#include <algorithm>
#include <cctype>

namespace numforge::textproc {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

bool has_digit(std::string_view s) {
  return std::any_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Token Token::from_rendered(std::string_view piece) {
  if (piece.rfind("##", 0) == 0) return Token{std::string(piece.substr(2)), true};
  return Token{std::string(piece), false};
}

std::vector<Token> tokens_from_rendered(const std::vector<std::string>& pieces) {
  std::vector<Token> out;
  out.reserve(pieces.size());
  for (const std::string& p : pieces) out.push_back(Token::from_rendered(p));
  return out;
}

std::vector<std::string> tokens_to_rendered(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const Token& t : tokens) out.push_back(t.rendered());
  return out;
}

std::vector<Token> whitespace_tokenize(const std::string& text) {
  std::vector<Token> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos > start) out.push_back(Token{text.substr(start, pos - start), false});
  }
  return out;
}

std::vector<Token> digit_tokenize(const std::vector<Token>& tokens) {
  std::vector<Token> out;
  out.reserve(tokens.size());
  for (const Token& t : tokens) {
    if (t.text.size() >= 2 && all_digits(t.text)) {
      for (std::size_t i = 0; i < t.text.size(); ++i)
        out.push_back(Token{std::string(1, t.text[i]), i == 0 ? t.continuation : true});
    } else {
      out.push_back(t);
    }
  }
  return out;
}

std::string detokenize(const std::vector<Token>& tokens) {
  std::string out;
  for (const Token& t : tokens) {
    if (!out.empty() && !t.continuation) out += ' ';
    out += t.text;
  }
  return out;
}

ShiftResult random_shift(int n_total, Rng& rng, int max_len) {
  if (n_total < 1) throw std::invalid_argument("empty sequence");
  if (n_total > max_len)
    throw LengthExceeded("sequence of " + std::to_string(n_total) + " exceeds " +
                         std::to_string(max_len));
  ShiftResult r;
  r.offset = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_len - n_total) + 1));
  r.position_ids.resize(n_total);
  for (int i = 0; i < n_total; ++i) r.position_ids[i] = r.offset + i;
  return r;
}

std::vector<Token> MaskedSample::restored() const {
  std::vector<Token> out = tokens;
  for (const auto& [pos, tok] : originals) out.at(pos) = tok;
  return out;
}

ordered_json MaskedSample::to_json() const {
  ordered_json j;
  j["tokens"] = tokens_to_rendered(tokens);
  j["mask_positions"] = mask_positions;
  ordered_json orig = ordered_json::object();
  for (const auto& [pos, tok] : originals) orig[std::to_string(pos)] = tok.rendered();
  j["originals"] = std::move(orig);
  return j;
}

MaskedSample MaskedSample::from_json(const ordered_json& j) {
  MaskedSample s;
  s.tokens = tokens_from_rendered(j.at("tokens").get<std::vector<std::string>>());
  s.mask_positions = j.at("mask_positions").get<std::vector<int>>();
  for (const auto& [key, val] : j.at("originals").items())
    s.originals[std::stoi(key)] = Token::from_rendered(val.get<std::string>());
  return s;
}

MaskedSample mlm_mask(const std::vector<Token>& tokens, Rng& rng, const MlmConfig& config) {
  if (static_cast<int>(tokens.size()) > config.max_len)
    throw LengthExceeded("sequence exceeds the MLM window");
  MaskedSample sample;
  sample.tokens = tokens;

  std::vector<int> selected;
  for (int i = 0; i < static_cast<int>(tokens.size()); ++i)
    if (rng.bernoulli(config.mask_p)) selected.push_back(i);
  if (static_cast<int>(selected.size()) > config.max_masks) {
    std::vector<std::size_t> keep =
        rng.sample_indices(selected.size(), static_cast<std::size_t>(config.max_masks));
    std::sort(keep.begin(), keep.end());
    std::vector<int> capped;
    capped.reserve(keep.size());
    for (std::size_t k : keep) capped.push_back(selected[k]);
    selected = std::move(capped);
  }

  for (int pos : selected) {
    sample.originals[pos] = tokens[pos];
    double roll = rng.uniform01();
    if (roll < config.replace_mask_p) {
      sample.tokens[pos] = Token{kMaskToken, false};
    } else if (roll < config.replace_mask_p + config.replace_random_p && !tokens.empty()) {
      sample.tokens[pos] = tokens[rng.below(tokens.size())];
    }  // else: left unchanged (still a prediction target)
  }
  sample.mask_positions = selected;  // built ascending
  return sample;
}

bool mlm_filter_paragraph(const std::string& text, int min_numbers) {
  int numbers = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos > start && has_digit(std::string_view(text).substr(start, pos - start))) ++numbers;
    if (numbers >= min_numbers) return true;
  }
  return false;
}

const std::set<std::string>& default_title_keywords() {
  static const std::set<std::string> keywords = {
      "season",     "economy",    "demographics", "conquest",   "war",
      "battle",     "uprising",   "rebellion",    "insurgency", "conflict",
      "crisis",     "revolution", "military history",           "mutiny",
      "regiment",   "revolt",     "geography",    "raids",      "insurrection",
      "invasion",   "feud",       "siege",        "campaign",   "expedition",
      "succession", "coup",       "university"};
  return keywords;
}

bool title_matches_keywords(const std::string& title, const std::set<std::string>& keywords) {
  std::string lower = title;
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (const std::string& k : keywords) {
    if (lower.find(k) != std::string::npos) return true;
  }
  return false;
}

}  // namespace numforge::textproc
