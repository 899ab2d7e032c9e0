#include "numforge/metrics.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace numforge::metrics {
namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::string remove_grouping_commas(const std::string& tok) {
  std::string out;
  for (std::size_t i = 0; i < tok.size(); ++i) {
    if (tok[i] == ',' && i > 0 && i + 1 < tok.size() && is_digit(tok[i - 1]) &&
        is_digit(tok[i + 1]))
      continue;
    out += tok[i];
  }
  return out;
}

std::string strip_punct(const std::string& tok) {
  std::string out;
  for (std::size_t i = 0; i < tok.size(); ++i) {
    char c = tok[i];
    if (std::isalnum(static_cast<unsigned char>(c))) {
      out += c;
    } else if (c == '.' && i > 0 && i + 1 < tok.size() && is_digit(tok[i - 1]) &&
               is_digit(tok[i + 1])) {
      out += c;
    }
  }
  return out;
}

bool is_article(const std::string& tok) {
  return tok == "a" || tok == "an" || tok == "the";
}

// Spans to score, one bag of tokens per span.
std::vector<std::string> answer_spans(const Answer& a) {
  switch (a.kind) {
    case Answer::Kind::Number:
      return {a.number};
    case Answer::Kind::Spans:
      return a.spans;
    case Answer::Kind::Date: {
      std::string joined;
      for (const std::string& part : {a.date_day, a.date_month, a.date_year}) {
        if (part.empty()) continue;
        if (!joined.empty()) joined += ' ';
        joined += part;
      }
      return {joined};
    }
  }
  return {};
}

std::string join_tokens(const std::vector<std::string>& toks) {
  std::string out;
  for (const std::string& t : toks) {
    if (!out.empty()) out += ' ';
    out += t;
  }
  return out;
}

// Token-bag F1 with the numeric gate: when the gold bag carries numbers,
// credit requires at least one shared numeric value.
double pair_f1(const std::vector<std::string>& pred,
               const std::vector<std::string>& gold) {
  if (pred.empty() && gold.empty()) return 1.0;
  if (pred.empty() || gold.empty()) return 0.0;

  std::set<std::string> gold_numbers, pred_numbers;
  for (const std::string& t : gold)
    if (canonical_number(t)) gold_numbers.insert(t);
  for (const std::string& t : pred)
    if (canonical_number(t)) pred_numbers.insert(t);
  if (!gold_numbers.empty()) {
    bool shared = std::any_of(pred_numbers.begin(), pred_numbers.end(),
                              [&](const std::string& t) {
                                return gold_numbers.count(t) != 0;
                              });
    if (!shared) return 0.0;
  }

  std::map<std::string, int> want;
  for (const std::string& t : gold) ++want[t];
  int common = 0;
  for (const std::string& t : pred) {
    auto it = want.find(t);
    if (it != want.end() && it->second > 0) {
      --it->second;
      ++common;
    }
  }
  if (common == 0) return 0.0;
  double precision = static_cast<double>(common) / static_cast<double>(pred.size());
  double recall = static_cast<double>(common) / static_cast<double>(gold.size());
  return 2.0 * precision * recall / (precision + recall);
}

// Optimal one-to-one alignment of per-span scores; sizes are tiny, so an
// over-subsets DP is exact. Falls back to greedy if a side is huge.
double align_spans(const std::vector<std::vector<std::string>>& pred,
                   const std::vector<std::vector<std::string>>& gold) {
  if (pred.empty() && gold.empty()) return 1.0;
  if (pred.empty() || gold.empty()) return 0.0;

  const std::size_t np = pred.size(), ng = gold.size();
  std::vector<double> scores(np * ng);
  for (std::size_t g = 0; g < ng; ++g)
    for (std::size_t p = 0; p < np; ++p)
      scores[g * np + p] = pair_f1(pred[p], gold[g]);

  double best_total = 0.0;
  if (np <= 16) {
    std::vector<double> dp(std::size_t{1} << np, -1.0);
    dp[0] = 0.0;
    for (std::size_t g = 0; g < std::min(ng, np); ++g) {
      std::vector<double> next(dp.size(), -1.0);
      for (std::size_t mask = 0; mask < dp.size(); ++mask) {
        if (dp[mask] < 0) continue;
        for (std::size_t p = 0; p < np; ++p) {
          if (mask & (std::size_t{1} << p)) continue;
          std::size_t m2 = mask | (std::size_t{1} << p);
          double v = dp[mask] + scores[g * np + p];
          if (v > next[m2]) next[m2] = v;
        }
      }
      // golds beyond min(ng, np) necessarily score 0
      dp = std::move(next);
    }
    for (double v : dp) best_total = std::max(best_total, v);
    if (ng > np) {
      // remaining golds unmatched; nothing to add
    }
  } else {
    std::vector<bool> used(np, false);
    for (std::size_t g = 0; g < ng; ++g) {
      double best = 0.0;
      std::size_t arg = np;
      for (std::size_t p = 0; p < np; ++p)
        if (!used[p] && scores[g * np + p] > best) {
          best = scores[g * np + p];
          arg = p;
        }
      if (arg < np) {
        used[arg] = true;
        best_total += best;
      }
    }
  }
  return best_total / static_cast<double>(std::max(np, ng));
}

}  // namespace

std::optional<std::string> canonical_number(const std::string& token) {
  if (token.empty()) return std::nullopt;
  std::size_t i = 0;
  bool neg = false;
  if (token[i] == '-') {
    neg = true;
    ++i;
  }
  std::string ip, fp;
  while (i < token.size() && is_digit(token[i])) ip += token[i++];
  if (i < token.size() && token[i] == '.') {
    ++i;
    while (i < token.size() && is_digit(token[i])) fp += token[i++];
  }
  if (i != token.size()) return std::nullopt;
  if (ip.empty() && fp.empty()) return std::nullopt;

  while (!fp.empty() && fp.back() == '0') fp.pop_back();
  std::size_t lead = 0;
  while (lead + 1 < ip.size() && ip[lead] == '0') ++lead;
  ip.erase(0, lead);
  if (ip.empty()) ip = "0";

  std::string out = ip;
  if (!fp.empty()) out += "." + fp;
  bool zero = ip == "0" && fp.empty();
  if (neg && !zero) out.insert(out.begin(), '-');
  return out;
}

std::vector<std::string> normalize_answer(const std::string& text) {
  std::vector<std::string> out;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    std::string t = remove_grouping_commas(lower(token));
    token.clear();
    if (auto num = canonical_number(t)) {
      out.push_back(*num);
      return;
    }
    t = strip_punct(t);
    if (t.empty()) return;
    if (auto num = canonical_number(t)) {
      out.push_back(*num);
      return;
    }
    if (!is_article(t)) out.push_back(t);
  };
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == '-')
      flush();
    else
      token += c;
  }
  flush();
  return out;
}

std::pair<int, double> score_pair(const Answer& pred, const Answer& gold) {
  std::vector<std::vector<std::string>> pred_bags, gold_bags;
  std::vector<std::string> pred_joined, gold_joined;
  for (const std::string& s : answer_spans(pred)) {
    pred_bags.push_back(normalize_answer(s));
    pred_joined.push_back(join_tokens(pred_bags.back()));
  }
  for (const std::string& s : answer_spans(gold)) {
    gold_bags.push_back(normalize_answer(s));
    gold_joined.push_back(join_tokens(gold_bags.back()));
  }
  std::sort(pred_joined.begin(), pred_joined.end());
  std::sort(gold_joined.begin(), gold_joined.end());
  int em = pred_joined == gold_joined ? 1 : 0;
  double f1 = align_spans(pred_bags, gold_bags);
  if (em == 1) f1 = 1.0;
  return {em, f1};
}

std::string answer_type_name(const Answer& answer) {
  switch (answer.kind) {
    case Answer::Kind::Number:
      return "number";
    case Answer::Kind::Spans:
      return answer.spans.size() > 1 ? "spans" : "span";
    case Answer::Kind::Date:
      return "date";
  }
  return "span";
}

namespace {

std::string augmentator_group(const std::string& query_id) {
  std::size_t colon = query_id.find(':');
  if (colon == std::string::npos) return "original";
  return query_id.substr(colon + 1);
}

ordered_json group_json(const GroupScore& g) {
  return ordered_json{{"count", g.count}, {"em", g.em()}, {"f1", g.f1()}};
}

}  // namespace

EvalReport evaluate(const DropDataset& gold,
                    const std::map<std::string, Answer>& predictions,
                    GroupBy group_by) {
  EvalReport report;
  bool want_type = group_by == GroupBy::AnswerType || group_by == GroupBy::All;
  bool want_aug = group_by == GroupBy::Augmentator || group_by == GroupBy::All;

  for (const auto& [pid, entry] : gold.entries()) {
    for (const QAPair& qa : entry.qa_pairs) {
      int em = 0;
      double f1 = 0.0;
      auto it = predictions.find(qa.query_id);
      if (it == predictions.end()) {
        report.missing.push_back(qa.query_id);
      } else {
        std::tie(em, f1) = score_pair(it->second, qa.answer);
      }
      report.overall.count += 1;
      report.overall.em_sum += em;
      report.overall.f1_sum += f1;
      if (want_type) {
        GroupScore& g = report.by_type[answer_type_name(qa.answer)];
        g.count += 1;
        g.em_sum += em;
        g.f1_sum += f1;
      }
      if (want_aug) {
        GroupScore& g = report.by_augmentator[augmentator_group(qa.query_id)];
        g.count += 1;
        g.em_sum += em;
        g.f1_sum += f1;
      }
    }
  }

  if (want_aug) {
    auto orig = report.by_augmentator.find("original");
    double base = orig == report.by_augmentator.end() ? 0.0 : orig->second.em();
    for (const auto& [name, g] : report.by_augmentator) {
      if (name == "original") continue;
      report.augmentator_diff[name] = g.em() - base;
    }
  }
  return report;
}

ordered_json EvalReport::to_json() const {
  ordered_json j;
  j["overall"] = group_json(overall);
  if (!by_type.empty()) {
    ordered_json t = ordered_json::object();
    for (const auto& [name, g] : by_type) t[name] = group_json(g);
    j["by_type"] = t;
  }
  if (!by_augmentator.empty()) {
    ordered_json t = ordered_json::object();
    for (const auto& [name, g] : by_augmentator) t[name] = group_json(g);
    j["by_augmentator"] = t;
    ordered_json d = ordered_json::object();
    for (const auto& [name, v] : augmentator_diff) d[name] = v;
    j["diff"] = d;
  }
  j["missing"] = missing;
  return j;
}

std::string EvalReport::table() const {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  auto row = [&](const std::string& name, const GroupScore& g,
                 std::optional<double> diff = std::nullopt) {
    os << "  " << name;
    for (std::size_t i = name.size(); i < 24; ++i) os << ' ';
    os << " n=" << g.count << "  EM " << g.em() << "  F1 " << g.f1();
    if (diff) os << "  dEM " << (*diff >= 0 ? "+" : "") << *diff;
    os << "\n";
  };
  os << "overall\n";
  row("all", overall);
  if (!by_type.empty()) {
    os << "by answer type\n";
    for (const auto& [name, g] : by_type) row(name, g);
  }
  if (!by_augmentator.empty()) {
    os << "by augmentator\n";
    for (const auto& [name, g] : by_augmentator) {
      auto d = augmentator_diff.find(name);
      if (d == augmentator_diff.end())
        row(name, g);
      else
        row(name, g, d->second);
    }
  }
  if (!missing.empty()) {
    os << "missing predictions (" << missing.size() << ")\n";
    for (const std::string& id : missing) os << "  " << id << "\n";
  }
  return os.str();
}

std::map<std::string, Answer> read_predictions(std::istream& in) {
  std::map<std::string, Answer> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    ordered_json j = ordered_json::parse(line);
    std::string qid = j.at("query_id").get<std::string>();
    const ordered_json& a = j.at("answer");
    Answer ans;
    if (a.is_object()) {
      ans = Answer::from_json(a);
    } else if (a.is_string()) {
      ans = Answer::make_span(a.get<std::string>());
    } else {
      ans.kind = Answer::Kind::Number;
      ans.number = a.dump();
    }
    out[qid] = ans;
  }
  return out;
}

}  // namespace numforge::metrics
