#include "numforge/augment.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "numforge/data.hpp"
#include "numforge/rng.hpp"

namespace numforge::aug {
namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && is_space(s[b])) ++b;
  while (e > b && is_space(s[e - 1])) --e;
  return s.substr(b, e - b);
}

struct TokenRef {
  std::size_t begin = 0;
  std::size_t end = 0;
};

std::vector<TokenRef> split_tokens(const std::string& text) {
  std::vector<TokenRef> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_space(text[i])) {
      ++i;
      continue;
    }
    std::size_t b = i;
    while (i < text.size() && !is_space(text[i])) ++i;
    out.push_back({b, i});
  }
  return out;
}

// Lowercased token with surrounding punctuation stripped; "" for pure
// punctuation tokens.
std::string token_key(const std::string& text, TokenRef t) {
  std::size_t b = t.begin, e = t.end;
  while (b < e && !is_alnum(text[b])) ++b;
  while (e > b && !is_alnum(text[e - 1])) --e;
  return lower(text.substr(b, e - b));
}

std::string strip_outer_punct(const std::string& tok) {
  std::size_t b = 0, e = tok.size();
  while (b < e && !is_alnum(tok[b])) ++b;
  while (e > b && !is_alnum(tok[e - 1])) --e;
  return tok.substr(b, e - b);
}

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t p = text.find(needle); p != std::string::npos;
       p = text.find(needle, p + 1))
    ++n;
  return n;
}

bool word_in_text(const std::string& text, const std::string& word) {
  for (std::size_t p = text.find(word); p != std::string::npos;
       p = text.find(word, p + 1)) {
    bool left_ok = p == 0 || !is_alnum(text[p - 1]);
    std::size_t after = p + word.size();
    bool right_ok = after >= text.size() || !is_alnum(text[after]);
    if (left_ok && right_ok) return true;
  }
  return false;
}

}  // namespace

std::vector<NumberSpan> extract_numbers(const std::string& text) {
  std::vector<NumberSpan> out;
  const std::size_t n = text.size();
  auto digit_at = [&](std::size_t p) { return p < n && is_digit(text[p]); };
  std::size_t i = 0;
  while (i < n) {
    if (!digit_at(i)) {
      ++i;
      continue;
    }
    std::size_t b = i;
    while (digit_at(i)) ++i;
    while (i < n && text[i] == ',' && digit_at(i + 1) && digit_at(i + 2) &&
           digit_at(i + 3) && !digit_at(i + 4))
      i += 4;
    if (i < n && text[i] == '.' && digit_at(i + 1)) {
      ++i;
      while (digit_at(i)) ++i;
    }
    auto parsed = parse_number(std::string_view(text).substr(b, i - b));
    if (parsed)
      out.push_back({b, i, parsed->value, parsed->decimals, parsed->grouped});
  }
  return out;
}

std::string render_like(const Decimal& value, int decimals, bool grouped) {
  std::string s = value.str_fixed(std::max(decimals, value.scale()));
  if (!grouped) return s;
  std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
  std::size_t dot = s.find('.');
  std::size_t int_end = dot == std::string::npos ? s.size() : dot;
  std::string out = s.substr(0, start);
  std::size_t len = int_end - start;
  for (std::size_t k = 0; k < len; ++k) {
    if (k != 0 && (len - k) % 3 == 0) out += ',';
    out += s[start + k];
  }
  out += s.substr(int_end);
  return out;
}

AntonymLexicon AntonymLexicon::builtin() {
  AntonymLexicon lex;
  lex.load_lines(data::antonym_table());
  return lex;
}

void AntonymLexicon::add_pair(const std::string& a, const std::string& b) {
  if (a.empty() || b.empty() || a == b)
    throw std::invalid_argument("malformed antonym pair: " + a + "|" + b);
  auto ia = map_.find(a);
  auto ib = map_.find(b);
  if ((ia != map_.end() && ia->second != b) || (ib != map_.end() && ib->second != a))
    throw std::invalid_argument("conflicting antonym pair: " + a + "|" + b);
  map_[a] = b;
  map_[b] = a;
}

void AntonymLexicon::load_lines(const std::string& text) {
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string line = eol == std::string::npos ? text.substr(pos)
                                                : text.substr(pos, eol - pos);
    pos = eol == std::string::npos ? text.size() + 1 : eol + 1;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    std::size_t bar = line.find('|');
    if (bar == std::string::npos)
      throw std::invalid_argument("antonym line missing '|': " + line);
    add_pair(trim(line.substr(0, bar)), trim(line.substr(bar + 1)));
  }
}

std::optional<std::string> AntonymLexicon::antonym(const std::string& word) const {
  auto it = map_.find(word);
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

std::optional<ComparisonParse> parse_comparison_question(
    const std::string& question, const AntonymLexicon& lexicon) {
  if (question.size() < 2 || question.back() != '?') return std::nullopt;
  std::string body = trim(question.substr(0, question.size() - 1));

  auto toks = split_tokens(body);
  if (toks.empty()) return std::nullopt;
  std::string head = token_key(body, toks[0]);
  if (head != "which" && head != "who") return std::nullopt;

  std::size_t or_pos = body.find(" or ");
  if (or_pos == std::string::npos) return std::nullopt;
  if (body.find(" or ", or_pos + 1) != std::string::npos) return std::nullopt;

  std::string left = body.substr(0, or_pos);
  std::string option_b = trim(body.substr(or_pos + 4));
  if (option_b.empty()) return std::nullopt;

  // the comparative must carry an attached ',' or ':' separating it from
  // the options ("higher," / "smaller:")
  auto ltoks = split_tokens(left);
  int hit = -1;
  std::string word;
  for (std::size_t t = 0; t < ltoks.size(); ++t) {
    std::string tok = left.substr(ltoks[t].begin, ltoks[t].end - ltoks[t].begin);
    if (tok.size() < 2) continue;
    char sep = tok.back();
    if (sep != ',' && sep != ':') continue;
    std::string w = tok.substr(0, tok.size() - 1);
    if (!lexicon.contains(lower(w))) continue;
    if (hit >= 0) return std::nullopt;
    hit = static_cast<int>(t);
    word = w;
  }
  if (hit < 0) return std::nullopt;

  std::size_t sep_end = ltoks[static_cast<std::size_t>(hit)].end;
  std::string option_a = trim(left.substr(sep_end));
  if (option_a.empty() || option_a == option_b) return std::nullopt;

  ComparisonParse parse;
  parse.comparative = word;
  parse.option_a = option_a;
  parse.option_b = option_b;
  parse.stem = left.substr(0, sep_end) + " ";
  parse.comparative_begin = ltoks[static_cast<std::size_t>(hit)].begin;
  return parse;
}

namespace {

constexpr std::size_t kLocatorWindow = 10;

std::optional<NumberSpan> locate_impl(const std::string& passage,
                                      const std::string& entity,
                                      bool years_only) {
  auto ptoks = split_tokens(passage);
  std::vector<std::string> pkeys(ptoks.size());
  for (std::size_t i = 0; i < ptoks.size(); ++i)
    pkeys[i] = token_key(passage, ptoks[i]);

  // candidates must share a sentence with the matched entity; a numeral in
  // a neighbouring sentence is never the entity's count even when closer
  std::vector<std::size_t> sentence(ptoks.size(), 0);
  for (std::size_t i = 1; i < ptoks.size(); ++i) {
    char prev_last = passage[ptoks[i - 1].end - 1];
    bool boundary = prev_last == '.' || prev_last == '!' || prev_last == '?';
    sentence[i] = sentence[i - 1] + (boundary ? 1 : 0);
  }

  auto etoks = split_tokens(entity);
  std::vector<std::string> ekeys;
  for (auto t : etoks) {
    std::string k = token_key(entity, t);
    if (!k.empty()) ekeys.push_back(k);
  }
  if (ekeys.empty()) return std::nullopt;

  // longest entity n-gram with exactly one occurrence in the passage
  std::ptrdiff_t m_begin = -1, m_end = -1;
  for (std::size_t len = ekeys.size(); len >= 1 && m_begin < 0; --len) {
    for (std::size_t s = 0; s + len <= ekeys.size() && m_begin < 0; ++s) {
      int count = 0;
      std::size_t at = 0;
      for (std::size_t i = 0; i + len <= pkeys.size(); ++i) {
        bool match = true;
        for (std::size_t j = 0; j < len; ++j)
          if (pkeys[i + j] != ekeys[s + j]) {
            match = false;
            break;
          }
        if (match) {
          ++count;
          at = i;
          if (count > 1) break;
        }
      }
      if (count == 1) {
        m_begin = static_cast<std::ptrdiff_t>(at);
        m_end = static_cast<std::ptrdiff_t>(at + len - 1);
      }
    }
  }
  if (m_begin < 0) return std::nullopt;

  struct Candidate {
    std::size_t distance;
    int after;
    std::size_t token;
    NumberSpan span;
  };
  std::vector<Candidate> cands;
  std::size_t tok = 0;
  for (const NumberSpan& ns : extract_numbers(passage)) {
    while (tok + 1 < ptoks.size() && ptoks[tok].end <= ns.begin) ++tok;
    if (years_only) {
      if (ns.decimals != 0 || ns.grouped) continue;
      if (ns.value < Decimal::integer(1000) || ns.value > Decimal::integer(2100))
        continue;
    }
    auto t = static_cast<std::ptrdiff_t>(tok);
    std::size_t distance = 0;
    int after = 0;
    if (t < m_begin) {
      distance = static_cast<std::size_t>(m_begin - t);
    } else if (t > m_end) {
      distance = static_cast<std::size_t>(t - m_end);
      after = 1;
    }
    if (distance > kLocatorWindow) continue;
    if (sentence[tok] != sentence[static_cast<std::size_t>(m_begin)] &&
        sentence[tok] != sentence[static_cast<std::size_t>(m_end)])
      continue;
    cands.push_back({distance, after, tok, ns});
  }
  if (cands.empty()) return std::nullopt;
  std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
    return std::tie(a.distance, a.after, a.token, a.span.begin) <
           std::tie(b.distance, b.after, b.token, b.span.begin);
  });
  if (cands.size() >= 2 && cands[0].distance == cands[1].distance &&
      cands[0].after == cands[1].after && cands[0].token == cands[1].token)
    return std::nullopt;
  return cands[0].span;
}

}  // namespace

std::optional<NumberSpan> locate_operand(const std::string& passage,
                                         const std::string& entity) {
  return locate_impl(passage, entity, false);
}

std::optional<NumberSpan> locate_year(const std::string& passage,
                                      const std::string& entity) {
  return locate_impl(passage, entity, true);
}

namespace {

AugmentedExample make_example(const QAPair& qa, const std::string& name,
                              std::string passage, std::string question,
                              Answer answer) {
  AugmentedExample e;
  e.origin_query_id = qa.query_id;
  e.augmentator = name;
  e.passage = std::move(passage);
  e.question = std::move(question);
  e.answer = std::move(answer);
  return e;
}

Answer styled_number(const Decimal& value, int decimals, bool grouped) {
  Answer a;
  a.kind = Answer::Kind::Number;
  a.number = render_like(value, decimals, grouped);
  return a;
}

Answer surface_number(const std::string& passage, const NumberSpan& ns) {
  Answer a;
  a.kind = Answer::Kind::Number;
  a.number = ns.surface(passage);
  return a;
}

std::optional<Decimal> gold_number(const QAPair& qa) {
  if (qa.answer.kind != Answer::Kind::Number) return std::nullopt;
  auto parsed = parse_number(qa.answer.number);
  if (!parsed) return std::nullopt;
  return parsed->value;
}

// [begin, end) sentence spans; a sentence ends at '.' followed by
// whitespace or end of text.
std::vector<std::pair<std::size_t, std::size_t>> split_sentences(
    const std::string& text) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::size_t start = 0, i = 0;
  while (i < text.size()) {
    if (text[i] == '.' && (i + 1 == text.size() || is_space(text[i + 1]))) {
      out.push_back({start, i + 1});
      ++i;
      while (i < text.size() && is_space(text[i])) ++i;
      start = i;
    } else {
      ++i;
    }
  }
  if (start < text.size()) out.push_back({start, text.size()});
  return out;
}

std::optional<AugmentedExample> aug_list_order(const std::string& passage,
                                               const QAPair& qa,
                                               const AugmentConfig&, Rng& rng) {
  for (auto [sb, se] : split_sentences(passage)) {
    std::string sent = passage.substr(sb, se - sb);

    std::vector<std::string> segs;
    std::size_t pos = 0;
    while (true) {
      std::size_t c = sent.find(", ", pos);
      if (c == std::string::npos) {
        segs.push_back(sent.substr(pos));
        break;
      }
      segs.push_back(sent.substr(pos, c - pos));
      pos = c + 2;
    }
    // lead-in anchor, at least two movable list elements, final "and" clause
    if (segs.size() < 4) continue;
    if (segs.back().rfind("and ", 0) != 0) continue;
    bool listy = !extract_numbers(segs.back()).empty();
    for (std::size_t k = 1; listy && k + 1 < segs.size(); ++k)
      listy = !extract_numbers(segs[k]).empty();
    if (!listy) continue;

    std::size_t mids = segs.size() - 2;
    std::vector<std::size_t> order(mids);
    std::iota(order.begin(), order.end(), std::size_t{0});
    bool shuffled = false;
    for (int attempt = 0; attempt < 64 && !shuffled; ++attempt) {
      rng.shuffle(order);
      shuffled = !std::is_sorted(order.begin(), order.end());
    }
    if (!shuffled) continue;

    std::string rebuilt = segs[0];
    for (std::size_t k : order) rebuilt += ", " + segs[1 + k];
    rebuilt += ", " + segs.back();

    std::string p2 = passage.substr(0, sb) + rebuilt + passage.substr(se);
    return make_example(qa, "list-order", p2, qa.question, qa.answer);
  }
  return std::nullopt;
}

std::optional<AugmentedExample> aug_patch_start(const std::string& passage,
                                                const QAPair& qa,
                                                const AugmentConfig& cfg, Rng&) {
  std::string p2 = std::to_string(cfg.patch_number) + ". " + passage;
  return make_example(qa, "patch-start", p2, qa.question, qa.answer);
}

std::optional<AugmentedExample> aug_patch_end(const std::string& passage,
                                              const QAPair& qa,
                                              const AugmentConfig& cfg, Rng&) {
  if (auto g = gold_number(qa); g && *g == Decimal::integer(cfg.patch_number))
    return std::nullopt;
  auto qtoks = split_tokens(qa.question);
  for (std::size_t i = 1; i < qtoks.size(); ++i) {
    std::string word = strip_outer_punct(
        qa.question.substr(qtoks[i].begin, qtoks[i].end - qtoks[i].begin));
    if (word.size() < 2 || !std::isupper(static_cast<unsigned char>(word[0])))
      continue;
    if (!word_in_text(passage, word)) continue;
    std::string p2 =
        passage + " " + word + " " + std::to_string(cfg.patch_number) + ".";
    return make_example(qa, "patch-end", p2, qa.question, qa.answer);
  }
  return std::nullopt;
}

std::optional<AugmentedExample> aug_order_swap(const std::string& passage,
                                               const QAPair& qa,
                                               const AugmentConfig& cfg, Rng&) {
  auto cp = parse_comparison_question(qa.question, cfg.lexicon);
  if (!cp) return std::nullopt;
  std::string q2 = cp->stem + cp->option_b + " or " + cp->option_a + "?";
  return make_example(qa, "order-swap", passage, q2, qa.answer);
}

// Resolves the gold span to one comparison option; returns the other.
std::optional<std::string> flipped_option(const QAPair& qa,
                                          const ComparisonParse& cp) {
  if (qa.answer.kind != Answer::Kind::Spans || qa.answer.spans.size() != 1)
    return std::nullopt;
  const std::string& gold = qa.answer.spans[0];
  if (gold == cp.option_a) return cp.option_b;
  if (gold == cp.option_b) return cp.option_a;
  return std::nullopt;
}

std::optional<AugmentedExample> aug_antonym(const std::string& passage,
                                            const QAPair& qa,
                                            const AugmentConfig& cfg, Rng&) {
  auto cp = parse_comparison_question(qa.question, cfg.lexicon);
  if (!cp) return std::nullopt;
  auto other = flipped_option(qa, *cp);
  if (!other) return std::nullopt;
  auto ant = cfg.lexicon.antonym(lower(cp->comparative));
  if (!ant) return std::nullopt;
  std::string word = *ant;
  if (std::isupper(static_cast<unsigned char>(cp->comparative[0])))
    word[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(word[0])));
  std::string q2 = qa.question;
  q2.replace(cp->comparative_begin, cp->comparative.size(), word);
  return make_example(qa, "antonym", passage, q2, Answer::make_span(*other));
}

std::optional<AugmentedExample> aug_ratio_swap(const std::string& passage,
                                               const QAPair& qa,
                                               const AugmentConfig& cfg, Rng&) {
  auto cp = parse_comparison_question(qa.question, cfg.lexicon);
  if (!cp) return std::nullopt;
  auto other = flipped_option(qa, *cp);
  if (!other) return std::nullopt;
  auto na = locate_operand(passage, cp->option_a);
  auto nb = locate_operand(passage, cp->option_b);
  if (!na || !nb) return std::nullopt;
  if (na->begin == nb->begin || na->value == nb->value) return std::nullopt;
  const NumberSpan& small = na->value < nb->value ? *na : *nb;
  const NumberSpan& large = na->value < nb->value ? *nb : *na;
  Decimal reflected = large.value.times(2) - small.value;
  std::string p2 = passage;
  p2.replace(small.begin, small.end - small.begin,
             render_like(reflected, small.decimals, small.grouped));
  return make_example(qa, "ratio-swap", p2, qa.question,
                      Answer::make_span(*other));
}

std::optional<AugmentedExample> aug_compl_percent(const std::string& passage,
                                                  const QAPair& qa,
                                                  const AugmentConfig&, Rng&) {
  if (qa.question.find("percent") == std::string::npos) return std::nullopt;
  if (qa.answer.kind != Answer::Kind::Number) return std::nullopt;
  auto parsed = parse_number(qa.answer.number);
  if (!parsed) return std::nullopt;
  const Decimal& a = parsed->value;
  if (a < Decimal::integer(0) || a > Decimal::integer(100)) return std::nullopt;

  std::size_t negated = count_occurrences(qa.question, " were not ");
  std::size_t plain = count_occurrences(qa.question, " were ");
  std::string q2 = qa.question;
  if (negated == 1 && plain == 1) {
    q2.replace(q2.find(" were not "), 10, " were ");
  } else if (negated == 0 && plain == 1) {
    q2.replace(q2.find(" were "), 6, " were not ");
  } else {
    return std::nullopt;
  }
  Decimal complement = Decimal::integer(100) - a;
  return make_example(qa, "compl-percent", passage, q2,
                      styled_number(complement, parsed->decimals, parsed->grouped));
}

// "How many more X (are|were) there (than|compared to) Y?"
struct MoreDiffQuestion {
  std::string x, y, verb;
};

std::optional<MoreDiffQuestion> parse_more_diff(const std::string& question) {
  const std::string prefix = "How many more ";
  if (question.rfind(prefix, 0) != 0 || question.back() != '?')
    return std::nullopt;
  std::string body =
      question.substr(prefix.size(), question.size() - prefix.size() - 1);
  for (const char* verb : {"are", "were"}) {
    for (const char* link : {"than", "compared to"}) {
      std::string marker = std::string(" ") + verb + " there " + link + " ";
      std::size_t p = body.find(marker);
      if (p == std::string::npos) continue;
      MoreDiffQuestion q;
      q.x = trim(body.substr(0, p));
      q.y = trim(body.substr(p + marker.size()));
      q.verb = verb;
      if (q.x.empty() || q.y.empty()) return std::nullopt;
      return q;
    }
  }
  return std::nullopt;
}

// Locates both difference operands and checks x - y against the gold
// difference before trusting them.
std::optional<std::pair<NumberSpan, NumberSpan>> checked_diff_operands(
    const std::string& passage, const QAPair& qa, const std::string& x,
    const std::string& y) {
  auto gold = gold_number(qa);
  if (!gold || gold->is_negative() || gold->is_zero()) return std::nullopt;
  auto nx = locate_operand(passage, x);
  auto ny = locate_operand(passage, y);
  if (!nx || !ny || nx->begin == ny->begin) return std::nullopt;
  if (!(nx->value - ny->value == *gold)) return std::nullopt;
  return std::make_pair(*nx, *ny);
}

std::optional<AugmentedExample> aug_how_many_more_max(const std::string& passage,
                                                      const QAPair& qa,
                                                      const AugmentConfig&,
                                                      Rng&) {
  auto parsed = parse_more_diff(qa.question);
  if (!parsed) return std::nullopt;
  auto ops = checked_diff_operands(passage, qa, parsed->x, parsed->y);
  if (!ops) return std::nullopt;
  std::string q2 = "How many " + parsed->x + " " + parsed->verb + " there?";
  return make_example(qa, "how-many-more-max", passage, q2,
                      surface_number(passage, ops->first));
}

std::optional<AugmentedExample> aug_diff_to_sum(const std::string& passage,
                                                const QAPair& qa,
                                                const AugmentConfig&, Rng&) {
  auto parsed = parse_more_diff(qa.question);
  if (!parsed) return std::nullopt;
  auto ops = checked_diff_operands(passage, qa, parsed->x, parsed->y);
  if (!ops) return std::nullopt;
  std::string q2 = "How many " + parsed->x + " and " + parsed->y + " " +
                   parsed->verb + " there?";
  Decimal sum = ops->first.value + ops->second.value;
  int decimals = std::max(ops->first.decimals, ops->second.decimals);
  bool grouped = ops->first.grouped || ops->second.grouped;
  return make_example(qa, "diff-to-sum", passage, q2,
                      styled_number(sum, decimals, grouped));
}

// "How many <unit> longer (was|is) X (than|compared to) Y?"
std::optional<AugmentedExample> aug_how_many_longer(const std::string& passage,
                                                    const QAPair& qa,
                                                    const AugmentConfig&, Rng&) {
  const std::string prefix = "How many ";
  if (qa.question.rfind(prefix, 0) != 0 || qa.question.back() != '?')
    return std::nullopt;
  std::string body =
      qa.question.substr(prefix.size(), qa.question.size() - prefix.size() - 1);
  for (const char* verb : {"was", "is"}) {
    std::string marker = std::string(" longer ") + verb + " ";
    std::size_t p = body.find(marker);
    if (p == std::string::npos) continue;
    std::string unit = trim(body.substr(0, p));
    std::string rest = body.substr(p + marker.size());
    for (const char* link : {" than ", " compared to "}) {
      std::size_t s = rest.find(link);
      if (s == std::string::npos) continue;
      std::string x = trim(rest.substr(0, s));
      std::string y = trim(rest.substr(s + std::string(link).size()));
      if (unit.empty() || x.empty() || y.empty()) return std::nullopt;
      auto ops = checked_diff_operands(passage, qa, x, y);
      if (!ops) return std::nullopt;
      std::string q2 = "How many " + unit + " " + verb + " " + x + "?";
      return make_example(qa, "how-many-longer", passage, q2,
                          surface_number(passage, ops->first));
    }
  }
  return std::nullopt;
}

// "How many years after E1 did E2?" -> "When did E2?"
std::optional<AugmentedExample> aug_how_many_after(const std::string& passage,
                                                   const QAPair& qa,
                                                   const AugmentConfig&, Rng&) {
  const std::string prefix = "How many years after ";
  if (qa.question.rfind(prefix, 0) != 0 || qa.question.back() != '?')
    return std::nullopt;
  std::string body =
      qa.question.substr(prefix.size(), qa.question.size() - prefix.size() - 1);
  std::size_t p = body.find(" did ");
  if (p == std::string::npos) return std::nullopt;
  std::string e1 = trim(body.substr(0, p));
  std::string e2 = trim(body.substr(p + 5));
  if (e1.empty() || e2.empty()) return std::nullopt;

  auto gold = gold_number(qa);
  if (!gold || gold->is_negative() || gold->is_zero()) return std::nullopt;
  auto y1 = locate_year(passage, e1);
  auto y2 = locate_year(passage, e2);
  if (!y1 || !y2 || y1->begin == y2->begin) return std::nullopt;
  if (!(y2->value - y1->value == *gold)) return std::nullopt;

  std::string q2 = "When did " + e2 + "?";
  return make_example(qa, "how-many-after", passage, q2,
                      surface_number(passage, *y2));
}

bool is_superlative_question(const std::string& question,
                             const AntonymLexicon& lexicon) {
  for (TokenRef t : split_tokens(question)) {
    std::string key = token_key(question, t);
    if (key.empty() || !lexicon.contains(key)) continue;
    if (key.size() >= 3 && key.compare(key.size() - 3, 3, "est") == 0)
      return true;
    if (key == "most" || key == "least" || key == "best" || key == "worst")
      return true;
  }
  return false;
}

std::optional<AugmentedExample> aug_range(const std::string& passage,
                                          const QAPair& qa,
                                          const AugmentConfig& cfg, Rng&) {
  if (cfg.range_mode == RangeMode::Add && cfg.range_addend == 0)
    throw std::invalid_argument("range addend must be nonzero");
  if (cfg.range_mode == RangeMode::Multiply && cfg.range_factor < 2)
    throw std::invalid_argument("range factor must be at least 2");

  bool comparison = parse_comparison_question(qa.question, cfg.lexicon).has_value();
  if (!comparison && !is_superlative_question(qa.question, cfg.lexicon))
    return std::nullopt;
  if (qa.answer.kind != Answer::Kind::Spans || qa.answer.spans.empty())
    return std::nullopt;
  for (const std::string& span : qa.answer.spans)
    for (char c : span)
      if (is_digit(c)) return std::nullopt;

  auto nums = extract_numbers(passage);
  if (nums.empty()) return std::nullopt;
  std::string p2 = passage;
  for (auto it = nums.rbegin(); it != nums.rend(); ++it) {
    Decimal v = cfg.range_mode == RangeMode::Add
                    ? it->value + Decimal::integer(cfg.range_addend)
                    : it->value.times(cfg.range_factor);
    p2.replace(it->begin, it->end - it->begin,
               render_like(v, it->decimals, it->grouped));
  }
  return make_example(qa, "range", p2, qa.question, qa.answer);
}

using AugFn = std::optional<AugmentedExample> (*)(const std::string&,
                                                  const QAPair&,
                                                  const AugmentConfig&, Rng&);

const std::vector<std::pair<std::string, AugFn>>& registry() {
  static const std::vector<std::pair<std::string, AugFn>> table = {
      {"list-order", aug_list_order},
      {"patch-start", aug_patch_start},
      {"patch-end", aug_patch_end},
      {"order-swap", aug_order_swap},
      {"antonym", aug_antonym},
      {"ratio-swap", aug_ratio_swap},
      {"compl-percent", aug_compl_percent},
      {"diff-to-sum", aug_diff_to_sum},
      {"how-many-more-max", aug_how_many_more_max},
      {"how-many-longer", aug_how_many_longer},
      {"how-many-after", aug_how_many_after},
      {"range", aug_range},
  };
  return table;
}

AugFn resolve(const std::string& name) {
  for (const auto& [n, fn] : registry())
    if (n == name) return fn;
  throw UnknownAugmentator("unknown augmentator: " + name);
}

std::vector<std::string> split_stages(const std::string& name) {
  std::vector<std::string> stages;
  std::size_t pos = 0;
  while (true) {
    std::size_t plus = name.find('+', pos);
    if (plus == std::string::npos) {
      stages.push_back(name.substr(pos));
      break;
    }
    stages.push_back(name.substr(pos, plus - pos));
    pos = plus + 1;
  }
  for (const std::string& s : stages)
    if (s.empty()) throw UnknownAugmentator("unknown augmentator: " + name);
  return stages;
}

}  // namespace

const std::vector<std::string>& augmentator_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [n, fn] : registry()) out.push_back(n);
    return out;
  }();
  return names;
}

std::vector<std::string> default_augmentator_names() {
  std::vector<std::string> out = augmentator_names();
  out.push_back("antonym+order-swap");
  return out;
}

std::optional<AugmentedExample> apply_augmentator(const std::string& name,
                                                  const std::string& passage,
                                                  const QAPair& qa,
                                                  const AugmentConfig& config) {
  std::vector<AugFn> fns;
  for (const std::string& stage : split_stages(name)) fns.push_back(resolve(stage));

  Rng rng = derived_rng(config.seed, "aug:" + name, fnv1a(qa.query_id));
  std::string cur_passage = passage;
  QAPair cur = qa;
  for (AugFn fn : fns) {
    auto step = fn(cur_passage, cur, config, rng);
    if (!step) return std::nullopt;
    cur_passage = step->passage;
    cur.question = step->question;
    cur.answer = step->answer;
  }
  AugmentedExample out;
  out.origin_query_id = qa.query_id;
  out.augmentator = name;
  out.passage = cur_passage;
  out.question = cur.question;
  out.answer = cur.answer;
  return out;
}

std::pair<DropDataset, AugmentStats> augment_dataset(
    const DropDataset& dataset, const std::vector<std::string>& names,
    const AugmentConfig& config) {
  std::vector<std::string> uniq;
  for (const std::string& n : names)
    if (std::find(uniq.begin(), uniq.end(), n) == uniq.end()) uniq.push_back(n);

  DropDataset out;
  AugmentStats stats;
  for (const std::string& n : uniq) stats[n] = 0;

  for (const auto& [pid, entry] : dataset.entries()) {
    for (const QAPair& qa : entry.qa_pairs) {
      for (const std::string& n : uniq) {
        auto r = apply_augmentator(n, entry.passage, qa, config);
        if (!r) continue;
        ++stats[n];
        QAPair out_qa;
        out_qa.question = r->question;
        out_qa.query_id = r->query_id();
        out_qa.answer = r->answer;
        out_qa.skill = qa.skill;
        PassageEntry pe;
        pe.passage = r->passage;
        pe.qa_pairs = {std::move(out_qa)};
        out.add(r->query_id(), std::move(pe));
      }
    }
  }
  return {out, stats};
}

}  // namespace numforge::aug
