#include "numforge/tdgen.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <set>

#include "numforge/data.hpp"

namespace numforge::td {

namespace {

constexpr int kBindAttempts = 50;
constexpr int kSentenceAttempts = 30;
// Container-decoration attribute slots stay empty half the time, matching
// the bare "in Spain" shape of typical passages.
constexpr double kDecorationEmptyP = 0.5;

const std::array<std::string, kSkillCount> kSkillNames = {
    "selection",
    "intra-entity-difference",
    "intra-entity-subset",
    "inter-entity-comparison",
    "inter-entity-superlative",
    "intra-entity-superlative",
    "inter-entity-sum",
};

bool is_punct_token(const std::string& t) {
  return t == "." || t == "," || t == "?" || t == ";" || t == ":";
}

// Joins tokens with single spaces, attaching punctuation tokens to the
// previous word and dropping empty tokens.
std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (const std::string& t : tokens) {
    if (t.empty()) continue;
    if (!out.empty() && !is_punct_token(t)) out += ' ';
    out += t;
  }
  return out;
}

std::string encode_verb(const VerbEntry& v) { return v.base + "\x1f" + v.past; }

VerbEntry decode_verb(const std::string& s) {
  std::size_t sep = s.find('\x1f');
  return VerbEntry{s.substr(0, sep), s.substr(sep + 1)};
}

std::optional<int> slot_index(std::string_view s) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) return std::nullopt;
  return v;
}

std::vector<std::string> split_ws(const std::string& text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t next = text.find(' ', pos);
    if (next == std::string::npos) next = text.size();
    if (next > pos) out.push_back(text.substr(pos, next - pos));
    pos = next + 1;
  }
  return out;
}

std::optional<Verb> slot_verb_category(std::string_view tag) {
  if (tag == "POS") return Verb::POS;
  if (tag == "NEG") return Verb::NEG;
  if (tag == "OBS") return Verb::OBS;
  if (tag == "POSTRN") return Verb::POS_TRN;
  if (tag == "NEGTRN") return Verb::NEG_TRN;
  if (tag == "DESTROY") return Verb::DESTROY;
  return std::nullopt;
}

std::string slot_key(const Slot& s) {
  switch (s.type) {
    case Slot::Type::CONT:
      return "CONT-" + std::to_string(s.index);
    case Slot::Type::NUM:
      return "NUM-" + std::to_string(s.index);
    case Slot::Type::ATTR:
      return "ATTR-" + std::to_string(s.index);
    case Slot::Type::ENT:
      return "ENT-" + std::to_string(s.index);
    case Slot::Type::VERB:
      return "VERB-" + std::to_string(s.index);
    case Slot::Type::LITERAL:
      return "";
  }
  return "";
}

}  // namespace

const std::string& skill_name(Skill s) { return kSkillNames[static_cast<int>(s)]; }

std::optional<Skill> skill_from_name(std::string_view name) {
  for (int i = 0; i < kSkillCount; ++i)
    if (kSkillNames[i] == name) return static_cast<Skill>(i);
  return std::nullopt;
}

void Vocabulary::validate() const {
  if (agents.empty() || environments.empty() || entities.empty() || attributes.empty())
    throw std::invalid_argument("vocabulary category empty");
  for (Verb v : {Verb::POS, Verb::NEG, Verb::OBS, Verb::POS_TRN, Verb::NEG_TRN}) {
    auto it = verbs.find(v);
    if (it == verbs.end() || it->second.empty())
      throw std::invalid_argument("vocabulary missing verbs for category " + verb_name(v));
  }
  std::set<std::string> names;
  for (const auto& list : {agents, environments}) {
    for (const std::string& n : list) {
      if (!names.insert(n).second)
        throw std::invalid_argument("duplicate container name in vocabulary: " + n);
    }
  }
  for (const auto& [child, parent] : environment_parents) {
    auto in = [&](const std::string& n) {
      return std::find(environments.begin(), environments.end(), n) != environments.end();
    };
    if (!in(child) || !in(parent))
      throw std::invalid_argument("parent link references unknown environment");
    if (environment_parents.count(parent))
      throw std::invalid_argument("environment nesting is limited to two levels");
  }
}

ordered_json Vocabulary::to_json() const {
  ordered_json j;
  j["domain"] = domain;
  j["agents"] = agents;
  j["environments"] = environments;
  ordered_json parents = ordered_json::object();
  for (const auto& [child, parent] : environment_parents) parents[child] = parent;
  j["environment_parents"] = std::move(parents);
  j["entities"] = entities;
  j["attributes"] = attributes;
  j["env_attributes"] = env_attributes;
  ordered_json verbs_j = ordered_json::object();
  for (const auto& [cat, list] : verbs) {
    ordered_json arr = ordered_json::array();
    for (const VerbEntry& v : list) arr.push_back({{"base", v.base}, {"past", v.past}});
    verbs_j[verb_name(cat)] = std::move(arr);
  }
  j["verbs"] = std::move(verbs_j);
  return j;
}

Vocabulary Vocabulary::from_json(const ordered_json& j) {
  Vocabulary v;
  v.domain = j.value("domain", std::string{"user"});
  v.agents = j.at("agents").get<std::vector<std::string>>();
  v.environments = j.at("environments").get<std::vector<std::string>>();
  if (j.contains("environment_parents")) {
    for (const auto& [child, parent] : j.at("environment_parents").items())
      v.environment_parents[child] = parent.get<std::string>();
  }
  v.entities = j.at("entities").get<std::vector<std::string>>();
  v.attributes = j.at("attributes").get<std::vector<std::string>>();
  if (j.contains("env_attributes"))
    v.env_attributes = j.at("env_attributes").get<std::vector<std::string>>();
  for (const auto& [cat_name, list] : j.at("verbs").items()) {
    auto cat = verb_from_name(cat_name);
    if (!cat) throw std::invalid_argument("unknown verb category: " + cat_name);
    for (const auto& e : list)
      v.verbs[*cat].push_back(
          VerbEntry{e.at("base").get<std::string>(), e.at("past").get<std::string>()});
  }
  v.validate();
  return v;
}

const Vocabulary& builtin_vocabulary(const std::string& domain) {
  static const Vocabulary history =
      Vocabulary::from_json(ordered_json::parse(data::vocab_history_json()));
  static const Vocabulary nfl =
      Vocabulary::from_json(ordered_json::parse(data::vocab_football_json()));
  if (domain == "history") return history;
  if (domain == "nfl") return nfl;
  throw std::invalid_argument("unknown builtin vocabulary: " + domain);
}

SentenceTemplate SentenceTemplate::parse(const std::string& text,
                                         std::vector<TemplateEvent> events) {
  SentenceTemplate t;
  t.text = text;
  t.events = std::move(events);
  for (const std::string& tok : split_ws(text)) {
    Slot s;
    s.text = tok;
    auto starts = [&](std::string_view p) { return tok.rfind(p, 0) == 0; };
    if (starts("CONT-")) {
      std::string_view rest = std::string_view(tok).substr(5);
      std::size_t dash = rest.find('-');
      if (dash == std::string_view::npos) throw std::invalid_argument("bad CONT slot: " + tok);
      auto idx = slot_index(rest.substr(0, dash));
      std::string_view kind = rest.substr(dash + 1);
      if (!idx || (kind != "AGT" && kind != "ENV"))
        throw std::invalid_argument("bad CONT slot: " + tok);
      s.type = Slot::Type::CONT;
      s.index = *idx;
      s.cont_kind = kind == "AGT" ? ContainerKind::AGT : ContainerKind::ENV;
    } else if (starts("NUM-") || starts("ATTR-") || starts("ENT-")) {
      std::size_t dash = tok.find('-');
      auto idx = slot_index(std::string_view(tok).substr(dash + 1));
      if (!idx) throw std::invalid_argument("bad slot: " + tok);
      s.type = starts("NUM-")    ? Slot::Type::NUM
               : starts("ATTR-") ? Slot::Type::ATTR
                                 : Slot::Type::ENT;
      s.index = *idx;
    } else if (starts("VERB-")) {
      std::string_view rest = std::string_view(tok).substr(5);
      std::size_t dash = rest.find('-');
      if (dash == std::string_view::npos) throw std::invalid_argument("bad VERB slot: " + tok);
      auto idx = slot_index(rest.substr(0, dash));
      std::string_view tag = rest.substr(dash + 1);
      if (!idx) throw std::invalid_argument("bad VERB slot: " + tok);
      s.type = Slot::Type::VERB;
      s.index = *idx;
      if (tag != "*") {
        auto cat = slot_verb_category(tag);
        if (!cat) throw std::invalid_argument("bad VERB slot: " + tok);
        s.verb_category = *cat;
      }
    } else {
      s.type = Slot::Type::LITERAL;
    }
    t.slots.push_back(std::move(s));
  }
  // An ATTR slot directly before a CONT-ENV slot decorates the container
  // and never feeds the world state.
  for (std::size_t i = 0; i + 1 < t.slots.size(); ++i) {
    if (t.slots[i].type == Slot::Type::ATTR && t.slots[i + 1].type == Slot::Type::CONT &&
        t.slots[i + 1].cont_kind == ContainerKind::ENV)
      t.slots[i].decoration = true;
  }
  return t;
}

std::string SentenceTemplate::to_string() const {
  std::string out;
  for (const Slot& s : slots) {
    if (!out.empty()) out += ' ';
    out += s.text;
  }
  return out;
}

const std::vector<SentenceTemplate>& shipped_templates() {
  static const std::vector<SentenceTemplate> templates = [] {
    std::vector<SentenceTemplate> out;
    ordered_json doc = ordered_json::parse(data::sentence_templates_json());
    for (const auto& t : doc) {
      std::vector<TemplateEvent> events;
      for (const auto& e : t.at("events")) {
        TemplateEvent ev;
        ev.verb_slot = e.at("verb").get<std::string>();
        ev.container_slot = e.at("container").get<std::string>();
        ev.other_slot = e.value("other", std::string{});
        ev.num_slot = e.at("num").get<std::string>();
        ev.attr_slot = e.at("attr").get<std::string>();
        ev.ent_slot = e.at("ent").get<std::string>();
        events.push_back(std::move(ev));
      }
      out.push_back(SentenceTemplate::parse(t.at("text").get<std::string>(), std::move(events)));
    }
    return out;
  }();
  return templates;
}

const std::vector<QuestionTemplate>& shipped_questions() {
  static const std::vector<QuestionTemplate> questions = {
      {0, Skill::SELECTION, "How many ATTR-1 ENT-1 were in CONT-1-ENV ?"},
      {1, Skill::SELECTION, "How many ATTR-1 ENT-1 did CONT-1-AGT VERB-POS ?"},
      {2, Skill::INTRA_ENTITY_DIFFERENCE,
       "How many more ATTR-1 ENT-1 were in CONT-1-ENV than ATTR-2 ENT-2 ?"},
      {3, Skill::INTRA_ENTITY_DIFFERENCE,
       "How many more ATTR-1 ENT-1 did CONT-1-AGT have than ATTR-2 ENT-2 ?"},
      {4, Skill::INTRA_ENTITY_SUBSET, "How many ENT-1 of CONT-1 were ATTR-1 ENT-1 ?"},
      {5, Skill::INTRA_ENTITY_SUBSET, "How many ENT-1 of CONT-1 were not ATTR-1 ENT-1 ?"},
      {6, Skill::INTER_ENTITY_COMPARISON,
       "Were there {more | less} ATTR-1 ENT-1 in CONT-1-ENV or in CONT-2-ENV ?"},
      {7, Skill::INTER_ENTITY_COMPARISON,
       "Who had {more | less} ATTR-1 ENT-1 , CONT-1-AGT or CONT-2-AGT ?"},
      {8, Skill::INTER_ENTITY_SUPERLATIVE,
       "Who had the {highest | lowest} number of ATTR-1 ENT-1 in total ?"},
      {9, Skill::INTRA_ENTITY_SUPERLATIVE,
       "What was the {highest | lowest} number of ATTR-1 ENT-1 VERB-POS in CONT-1-ENV ?"},
      {10, Skill::INTRA_ENTITY_SUPERLATIVE,
       "What is the {highest | lowest} number of ATTR-1 ENT-1 CONT-1-AGT VERB-POS ?"},
      {11, Skill::INTER_ENTITY_SUM,
       "How many ATTR-1 ENT-1 were in CONT-1-ENV (, CONT-*-ENV) and CONT-2-ENV "
       "{in total | combined} ?"},
      {12, Skill::INTER_ENTITY_SUM,
       "How many ATTR-1 ENT-1 did CONT-1-ENV (, CONT-*-ENV) and CONT-2-ENV have "
       "{in total | combined} ?"},
  };
  return questions;
}

const std::vector<std::string>& ReusePool::values(const std::string& category) const {
  static const std::vector<std::string> empty;
  auto it = pools_.find(category);
  return it == pools_.end() ? empty : it->second;
}

bool ReusePool::choose_reuse(bool pool_available, bool vocab_available, double p, Rng& rng) {
  if (!pool_available) return false;
  if (!vocab_available) return true;
  ++eligible_;
  bool reuse = rng.bernoulli(p);
  if (reuse) ++hits_;
  return reuse;
}

void ReusePool::note(const std::string& category, const std::string& value) {
  auto& pool = pools_[category];
  if (std::find(pool.begin(), pool.end(), value) == pool.end()) pool.push_back(value);
}

std::string render_question(const QuestionBinding& b) {
  std::vector<std::string> t;
  const std::string& attr = b.attribute;
  const std::string& ent = b.entity;
  auto more = [&] { return b.want_max ? "more" : "less"; };
  auto highest = [&] { return b.want_max ? "highest" : "lowest"; };
  auto total_word = [&] { return b.complement ? "combined" : "in total"; };
  switch (b.template_id) {
    case 0:
      t = {"How", "many", attr, ent, "were", "in", b.containers.at(0), "?"};
      break;
    case 1:
      t = {"How", "many", attr, ent, "did", b.containers.at(0), b.verb.base, "?"};
      break;
    case 2:
      t = {"How", "many", "more", attr,         ent, "were", "in", b.containers.at(0),
           "than",  b.attribute2, b.entity2, "?"};
      break;
    case 3:
      t = {"How", "many", "more", attr, ent, "did", b.containers.at(0),
           "have", "than", b.attribute2, b.entity2, "?"};
      break;
    case 4:
      t = {"How", "many", ent, "of", b.containers.at(0), "were", attr, ent, "?"};
      break;
    case 5:
      t = {"How", "many", ent, "of", b.containers.at(0), "were", "not", attr, ent, "?"};
      break;
    case 6:
      t = {"Were", "there", more(), attr, ent, "in", b.containers.at(0),
           "or", "in", b.containers.at(1), "?"};
      break;
    case 7:
      t = {"Who", "had", more(), attr, ent, ",", b.containers.at(0),
           "or", b.containers.at(1), "?"};
      break;
    case 8:
      t = {"Who", "had", "the", highest(), "number", "of", attr, ent, "in", "total", "?"};
      break;
    case 9:
      t = {"What", "was", "the", highest(), "number", "of", attr, ent,
           b.verb.past, "in", b.containers.at(0), "?"};
      break;
    case 10:
      t = {"What", "is", "the", highest(), "number", "of", attr, ent,
           b.containers.at(0), b.verb.past, "?"};
      break;
    case 11:
    case 12: {
      t = {"How", "many", attr, ent};
      if (b.template_id == 11) {
        t.insert(t.end(), {"were", "in", b.containers.at(0)});
      } else {
        t.insert(t.end(), {"did", b.containers.at(0)});
      }
      for (std::size_t i = 1; i + 1 < b.containers.size(); ++i)
        t.insert(t.end(), {",", b.containers[i]});
      t.insert(t.end(), {"and", b.containers.back()});
      if (b.template_id == 12) t.push_back("have");
      std::string tw = total_word();
      for (const std::string& w : split_ws(tw)) t.push_back(w);
      t.push_back("?");
      break;
    }
    default:
      throw std::invalid_argument("unknown question template id");
  }
  return join_tokens(t);
}

namespace {

std::int64_t kind_total(const WorldState& w, const std::string& c, const std::string& e,
                        const std::string& attr) {
  return w.total(c, e, attr.empty() ? kAnyAttr : attr);
}

bool event_matches(const WorldEvent& ev, const std::string& c, const std::string& e,
                   const std::string& attr) {
  return ev.container == c && ev.verb == Verb::POS && ev.entity == e &&
         (attr.empty() || ev.attribute == attr) && !ev.word.empty();
}

}  // namespace

Answer td_oracle(const WorldState& world, const QuestionBinding& b) {
  switch (b.skill) {
    case Skill::SELECTION: {
      if (b.template_id == 0)
        return Answer::make_number(kind_total(world, b.containers.at(0), b.entity, b.attribute));
      // Verb-anchored form: recompute from the event log, independently of
      // the counts map.
      std::int64_t sum = 0;
      for (const WorldEvent& ev : world.events()) {
        if (event_matches(ev, b.containers.at(0), b.entity, b.attribute) &&
            ev.word == b.verb.past)
          sum += ev.amount;
      }
      return Answer::make_number(sum);
    }
    case Skill::INTRA_ENTITY_DIFFERENCE: {
      std::int64_t n1 = kind_total(world, b.containers.at(0), b.entity, b.attribute);
      std::int64_t n2 = kind_total(world, b.containers.at(0), b.entity2, b.attribute2);
      if (n1 == n2) throw AmbiguousBinding("difference operands tie");
      return Answer::make_number(n1 > n2 ? n1 - n2 : n2 - n1);
    }
    case Skill::INTRA_ENTITY_SUBSET: {
      std::int64_t whole = world.total(b.containers.at(0), b.entity, kAnyAttr);
      std::int64_t part = world.total(b.containers.at(0), b.entity, b.attribute);
      return Answer::make_number(b.complement ? whole - part : part);
    }
    case Skill::INTER_ENTITY_COMPARISON: {
      std::int64_t n1 = kind_total(world, b.containers.at(0), b.entity, b.attribute);
      std::int64_t n2 = kind_total(world, b.containers.at(1), b.entity, b.attribute);
      if (n1 == n2) throw AmbiguousBinding("comparison tie");
      bool first = b.want_max ? n1 > n2 : n1 < n2;
      return Answer::make_span(b.containers.at(first ? 0 : 1));
    }
    case Skill::INTER_ENTITY_SUPERLATIVE: {
      if (b.containers.size() < 2) throw std::invalid_argument("superlative needs 2+ candidates");
      std::size_t best = 0;
      bool tie = false;
      std::vector<std::int64_t> n(b.containers.size());
      for (std::size_t i = 0; i < b.containers.size(); ++i)
        n[i] = kind_total(world, b.containers[i], b.entity, b.attribute);
      for (std::size_t i = 1; i < n.size(); ++i) {
        if (n[i] == n[best]) {
          tie = true;
        } else if (b.want_max ? n[i] > n[best] : n[i] < n[best]) {
          best = i;
          tie = false;
        }
      }
      for (std::size_t i = 0; i < n.size(); ++i)
        if (i != best && n[i] == n[best]) tie = true;
      if (tie) throw AmbiguousBinding("superlative tie");
      return Answer::make_span(b.containers[best]);
    }
    case Skill::INTRA_ENTITY_SUPERLATIVE: {
      std::optional<std::int64_t> best;
      for (const WorldEvent& ev : world.events()) {
        if (!event_matches(ev, b.containers.at(0), b.entity, b.attribute) ||
            ev.word != b.verb.past)
          continue;
        if (!best || (b.want_max ? ev.amount > *best : ev.amount < *best)) best = ev.amount;
      }
      if (!best) throw std::invalid_argument("no matching events for superlative binding");
      return Answer::make_number(*best);
    }
    case Skill::INTER_ENTITY_SUM: {
      if (b.containers.size() < 2) throw std::invalid_argument("sum needs 2+ containers");
      std::int64_t sum = 0;
      for (const std::string& c : b.containers) sum += kind_total(world, c, b.entity, b.attribute);
      return Answer::make_number(sum);
    }
  }
  throw std::invalid_argument("bad skill");
}

namespace {

// One bound value drawn under the reuse rule, with distinctness handled by
// shrinking the candidate sets instead of rejecting draws.
std::optional<std::string> bind_value(ReusePool& pool, const std::string& category,
                                      const std::vector<std::string>& vocab_list,
                                      const std::set<std::string>& exclude, double p, Rng& rng) {
  std::vector<std::string> from_pool;
  for (const std::string& v : pool.values(category))
    if (!exclude.count(v)) from_pool.push_back(v);
  std::vector<std::string> from_vocab;
  for (const std::string& v : vocab_list)
    if (!exclude.count(v)) from_vocab.push_back(v);
  if (from_pool.empty() && from_vocab.empty()) return std::nullopt;
  bool reuse = pool.choose_reuse(!from_pool.empty(), !from_vocab.empty(), p, rng);
  const auto& source = reuse ? from_pool : from_vocab;
  return source[rng.below(source.size())];
}

std::vector<std::string> verb_vocab_strings(const Vocabulary& vocab, Verb cat) {
  std::vector<std::string> out;
  auto it = vocab.verbs.find(cat);
  if (it != vocab.verbs.end())
    for (const VerbEntry& v : it->second) out.push_back(encode_verb(v));
  return out;
}

std::string verb_pool_category(Verb cat) { return "verb-" + verb_name(cat); }

}  // namespace

InstantiatedSentence instantiate_sentence(const SentenceTemplate& tmpl, const Vocabulary& vocab,
                                          ReusePool& pool, double p, Rng& rng,
                                          const WorldState& world, std::int64_t num_lo,
                                          std::int64_t num_hi) {
  for (int attempt = 0; attempt < kBindAttempts; ++attempt) {
    std::map<std::string, std::string> values;         // slot key -> surface value
    std::map<std::string, VerbEntry> verb_values;      // "VERB-i" -> entry
    std::map<std::string, Verb> verb_categories;       // "VERB-i" -> resolved category
    std::set<std::string> used_containers;
    bool failed = false;

    for (const Slot& s : tmpl.slots) {
      std::string key = slot_key(s);
      if (s.type == Slot::Type::LITERAL || s.type == Slot::Type::NUM || values.count(key))
        continue;
      switch (s.type) {
        case Slot::Type::CONT: {
          const auto& list = s.cont_kind == ContainerKind::AGT ? vocab.agents : vocab.environments;
          auto v = bind_value(pool, s.cont_kind == ContainerKind::AGT ? "cont-agt" : "cont-env",
                              list, used_containers, p, rng);
          if (!v) {
            failed = true;
            break;
          }
          values[key] = *v;
          used_containers.insert(*v);
          break;
        }
        case Slot::Type::ENT: {
          auto v = bind_value(pool, "ent", vocab.entities, {}, p, rng);
          if (!v) {
            failed = true;
            break;
          }
          values[key] = *v;
          break;
        }
        case Slot::Type::ATTR: {
          if (s.decoration) {
            if (vocab.env_attributes.empty() || rng.bernoulli(kDecorationEmptyP)) {
              values[key] = "";
            } else {
              auto v = bind_value(pool, "env-attr", vocab.env_attributes, {}, p, rng);
              if (!v) {
                failed = true;
                break;
              }
              values[key] = *v;
            }
          } else {
            auto v = bind_value(pool, "attr", vocab.attributes, {}, p, rng);
            if (!v) {
              failed = true;
              break;
            }
            values[key] = *v;
          }
          break;
        }
        case Slot::Type::VERB: {
          Verb cat;
          if (s.verb_category) {
            cat = *s.verb_category;
          } else {
            // Wildcard slots draw among the single-container categories.
            static const std::array<Verb, 3> kWildcard = {Verb::POS, Verb::NEG, Verb::OBS};
            cat = kWildcard[rng.below(3)];
          }
          auto v = bind_value(pool, verb_pool_category(cat), verb_vocab_strings(vocab, cat), {},
                              p, rng);
          if (!v) {
            failed = true;
            break;
          }
          values[key] = *v;
          verb_values[key] = decode_verb(*v);
          verb_categories[key] = cat;
          break;
        }
        default:
          break;
      }
      if (failed) break;
    }
    if (failed) continue;

    // (attribute, entity) pairs bound to distinct slot pairs must differ.
    std::map<std::pair<std::string, std::string>, std::pair<std::string, std::string>> pair_slots;
    for (const TemplateEvent& ev : tmpl.events) {
      auto slot_pair = std::make_pair(ev.attr_slot, ev.ent_slot);
      auto value_pair = std::make_pair(values.at(ev.attr_slot), values.at(ev.ent_slot));
      pair_slots[slot_pair] = value_pair;
    }
    std::set<std::pair<std::string, std::string>> seen_pairs;
    for (const auto& [sp, vp] : pair_slots) {
      if (!seen_pairs.insert(vp).second) {
        failed = true;
        break;
      }
    }
    if (failed) continue;

    // Walk the events on a scratch world, sampling NUM values under the
    // feasibility caps so removals never overdraw.
    WorldState scratch = world;
    std::vector<WorldEvent> events;
    for (const TemplateEvent& tev : tmpl.events) {
      WorldEvent ev;
      if (tev.verb_slot == "OBS") {
        ev.verb = Verb::OBS;
      } else {
        ev.verb = verb_categories.at(tev.verb_slot);
        ev.word = verb_values.at(tev.verb_slot).past;
      }
      ev.container = values.at(tev.container_slot);
      if (!tev.other_slot.empty()) ev.other = values.at(tev.other_slot);
      ev.entity = values.at(tev.ent_slot);
      ev.attribute = values.at(tev.attr_slot);

      if (values.count(tev.num_slot)) {
        ev.amount = std::stoll(values.at(tev.num_slot));
      } else {
        std::int64_t hi = num_hi;
        const std::string* donor = nullptr;
        if (ev.verb == Verb::NEG || ev.verb == Verb::DESTROY || ev.verb == Verb::NEG_TRN)
          donor = &ev.container;
        else if (ev.verb == Verb::POS_TRN)
          donor = &ev.other;
        if (donor) hi = std::min(hi, scratch.total(*donor, ev.entity, ev.attribute));
        if (hi < num_lo) {
          failed = true;
          break;
        }
        ev.amount = rng.range(num_lo, hi);
        values[tev.num_slot] = std::to_string(ev.amount);
      }
      if (!scratch.try_apply(ev)) {
        failed = true;
        break;
      }
      events.push_back(std::move(ev));
    }
    if (failed) continue;

    // Render, then persist the accepted bindings into the reuse pools.
    std::vector<std::string> tokens;
    for (const Slot& s : tmpl.slots) {
      if (s.type == Slot::Type::LITERAL) {
        tokens.push_back(s.text);
      } else if (s.type == Slot::Type::VERB) {
        tokens.push_back(verb_values.at(slot_key(s)).past);
      } else {
        tokens.push_back(values.at(slot_key(s)));
      }
    }
    for (const Slot& s : tmpl.slots) {
      std::string key = slot_key(s);
      if (key.empty()) continue;
      switch (s.type) {
        case Slot::Type::CONT:
          pool.note(s.cont_kind == ContainerKind::AGT ? "cont-agt" : "cont-env", values.at(key));
          break;
        case Slot::Type::ENT:
          pool.note("ent", values.at(key));
          break;
        case Slot::Type::ATTR:
          if (!values.at(key).empty())
            pool.note(s.decoration ? "env-attr" : "attr", values.at(key));
          break;
        case Slot::Type::VERB:
          pool.note(verb_pool_category(verb_categories.at(key)), values.at(key));
          break;
        default:
          break;
      }
    }
    return InstantiatedSentence{join_tokens(tokens), std::move(events)};
  }
  throw Unsatisfiable("no consistent binding for template: " + tmpl.text);
}

std::string TdPassage::passage_text() const {
  std::string out;
  for (const std::string& s : sentences) {
    if (!out.empty()) out += ' ';
    out += s;
  }
  return out;
}

TdGenerator::TdGenerator(TdConfig config) : config_(std::move(config)) {
  if (config_.vocab.agents.empty()) config_.vocab = builtin_vocabulary("history");
  config_.vocab.validate();
  if (config_.reuse_p < 0.0 || config_.reuse_p > 1.0)
    throw std::invalid_argument("reuse probability out of range");
  if (config_.num_lo < 0 || config_.num_hi < config_.num_lo)
    throw std::invalid_argument("bad number range");
  if (config_.min_sentences < 1 || config_.max_sentences < config_.min_sentences)
    throw std::invalid_argument("bad sentence count range");
}

TdPassage TdGenerator::generate(std::uint64_t index) const {
  Rng rng = derived_rng(config_.seed, "td", index);
  const Vocabulary& vocab = config_.vocab;

  TdPassage passage;
  for (const std::string& a : vocab.agents)
    passage.world.register_container(a, ContainerKind::AGT);
  // Parents first so child links resolve.
  for (const std::string& e : vocab.environments)
    if (!vocab.environment_parents.count(e))
      passage.world.register_container(e, ContainerKind::ENV);
  for (const auto& [child, parent] : vocab.environment_parents)
    passage.world.register_container(child, ContainerKind::ENV, parent);
  for (const auto& [cat, list] : vocab.verbs)
    for (const VerbEntry& v : list) passage.verb_bases[v.past] = v.base;

  ReusePool pool;
  const auto& templates = shipped_templates();
  int want = static_cast<int>(rng.range(config_.min_sentences, config_.max_sentences));
  for (int i = 0; i < want; ++i) {
    bool placed = false;
    for (int attempt = 0; attempt < kSentenceAttempts && !placed; ++attempt) {
      const SentenceTemplate& tmpl = templates[rng.below(templates.size())];
      try {
        InstantiatedSentence inst = instantiate_sentence(tmpl, vocab, pool, config_.reuse_p, rng,
                                                         passage.world, config_.num_lo,
                                                         config_.num_hi);
        for (const WorldEvent& ev : inst.events) passage.world.apply(ev);
        passage.sentences.push_back(std::move(inst.text));
        placed = true;
      } catch (const Unsatisfiable&) {
        continue;
      }
    }
    // A slot of the passage may stay unfilled only if every template failed
    // repeatedly; the passage then ships with fewer sentences.
  }
  passage.reuse_eligible = pool.eligible();
  passage.reuse_hits = pool.hits();

  gen_td_questions(passage, config_.question_quota, rng);
  return passage;
}

namespace {

struct WorldView {
  std::vector<std::string> agents;  // mention order
  std::vector<std::string> envs;
  std::vector<std::string> all;
  // (container, entity) -> attribute options: "" (all attributes) first,
  // then each attributed key, in map order.
  std::vector<std::tuple<std::string, std::string, std::string>> options;
};

WorldView build_view(const WorldState& world) {
  WorldView view;
  auto seen = [](const std::vector<std::string>& v, const std::string& s) {
    return std::find(v.begin(), v.end(), s) != v.end();
  };
  for (const WorldEvent& ev : world.events()) {
    for (const std::string* name : {&ev.container, &ev.other}) {
      if (name->empty() || seen(view.all, *name)) continue;
      view.all.push_back(*name);
      (world.kind_of(*name) == ContainerKind::AGT ? view.agents : view.envs).push_back(*name);
    }
  }
  std::set<std::pair<std::string, std::string>> ce_seen;
  for (const auto& [c, e, a] : world.keys()) {
    if (!seen(view.all, c)) continue;  // parent-only mirrors are not asked about
    if (ce_seen.insert({c, e}).second) view.options.emplace_back(c, e, "");
    view.options.emplace_back(c, e, a);
  }
  return view;
}

std::int64_t opt_total(const WorldState& w, const std::string& c, const std::string& e,
                       const std::string& a) {
  return w.total(c, e, a.empty() ? kAnyAttr : a);
}

bool is_env(const WorldState& w, const std::string& c) {
  return w.kind_of(c) == ContainerKind::ENV;
}

// Verb-anchored candidate: all events touching (c, e, attr-or-any) are POS
// with one shared verb word, so "did C <verb>" equals the current count.
std::optional<std::string> sole_pos_word(const WorldState& w, const std::string& c,
                                         const std::string& e, const std::string& a) {
  std::string word;
  for (const WorldEvent& ev : w.events()) {
    bool touches = (ev.container == c || ev.other == c) && ev.entity == e &&
                   (a.empty() || ev.attribute == a);
    if (!touches) continue;
    if (ev.container != c || ev.verb != Verb::POS || ev.word.empty()) return std::nullopt;
    if (word.empty()) word = ev.word;
    if (ev.word != word) return std::nullopt;
  }
  if (word.empty()) return std::nullopt;
  return word;
}

}  // namespace

void gen_td_questions(TdPassage& passage, int quota, Rng& rng) {
  const WorldState& world = passage.world;
  WorldView view = build_view(world);
  const auto& questions = shipped_questions();
  std::set<std::string> asked;
  int attempts = std::max(quota * 25, 100);

  for (int attempt = 0; attempt < attempts && static_cast<int>(passage.qa_pairs.size()) < quota;
       ++attempt) {
    const QuestionTemplate& qt = questions[rng.below(questions.size())];
    std::vector<QuestionBinding> candidates;

    switch (qt.id) {
      case 0: {
        for (const auto& [c, e, a] : view.options) {
          if (!is_env(world, c) || opt_total(world, c, e, a) <= 0) continue;
          QuestionBinding b;
          b.template_id = 0;
          b.skill = Skill::SELECTION;
          b.containers = {c};
          b.entity = e;
          b.attribute = a;
          candidates.push_back(std::move(b));
        }
        break;
      }
      case 1: {
        for (const auto& [c, e, a] : view.options) {
          if (is_env(world, c)) continue;
          auto word = sole_pos_word(world, c, e, a);
          if (!word || !passage.verb_bases.count(*word)) continue;
          QuestionBinding b;
          b.template_id = 1;
          b.skill = Skill::SELECTION;
          b.containers = {c};
          b.entity = e;
          b.attribute = a;
          b.verb = VerbEntry{passage.verb_bases.at(*word), *word};
          candidates.push_back(std::move(b));
        }
        break;
      }
      case 2:
      case 3: {
        bool env = qt.id == 2;
        for (const auto& [c1, e1, a1] : view.options) {
          if (is_env(world, c1) != env) continue;
          for (const auto& [c2, e2, a2] : view.options) {
            if (c2 != c1) continue;
            if (e1 == e2 && (a1.empty() || a2.empty() || a1 == a2)) continue;
            std::int64_t n1 = opt_total(world, c1, e1, a1);
            std::int64_t n2 = opt_total(world, c2, e2, a2);
            if (n1 <= n2 || n2 <= 0) continue;
            QuestionBinding b;
            b.template_id = qt.id;
            b.skill = Skill::INTRA_ENTITY_DIFFERENCE;
            b.containers = {c1};
            b.entity = e1;
            b.attribute = a1;
            b.entity2 = e2;
            b.attribute2 = a2;
            candidates.push_back(std::move(b));
          }
        }
        break;
      }
      case 4:
      case 5: {
        for (const auto& [c, e, a] : view.options) {
          if (a.empty()) continue;
          std::int64_t whole = world.total(c, e, kAnyAttr);
          std::int64_t part = world.total(c, e, a);
          if (part <= 0 || part >= whole) continue;
          QuestionBinding b;
          b.template_id = qt.id;
          b.skill = Skill::INTRA_ENTITY_SUBSET;
          b.containers = {c};
          b.entity = e;
          b.attribute = a;
          b.complement = qt.id == 5;
          candidates.push_back(std::move(b));
        }
        break;
      }
      case 6:
      case 7: {
        bool env = qt.id == 6;
        bool want_max = rng.bernoulli(0.5);
        const auto& conts = env ? view.envs : view.agents;
        for (const auto& [c1, e, a] : view.options) {
          if (is_env(world, c1) != env) continue;
          for (const std::string& c2 : conts) {
            if (c2 == c1) continue;
            std::int64_t n1 = opt_total(world, c1, e, a);
            std::int64_t n2 = opt_total(world, c2, e, a);
            if (n1 <= 0 || n2 <= 0 || n1 == n2) continue;
            QuestionBinding b;
            b.template_id = qt.id;
            b.skill = Skill::INTER_ENTITY_COMPARISON;
            b.containers = {c1, c2};
            b.entity = e;
            b.attribute = a;
            b.want_max = want_max;
            candidates.push_back(std::move(b));
          }
        }
        break;
      }
      case 8: {
        bool want_max = rng.bernoulli(0.5);
        std::set<std::pair<std::string, std::string>> asked_keys;
        for (const auto& [c, e, a] : view.options) {
          if (is_env(world, c)) continue;
          if (!asked_keys.insert({e, a}).second) continue;
          std::vector<std::string> holders;
          for (const std::string& agent : view.agents)
            if (opt_total(world, agent, e, a) > 0) holders.push_back(agent);
          if (holders.size() < 2) continue;
          std::vector<std::int64_t> ns;
          for (const std::string& h : holders) ns.push_back(opt_total(world, h, e, a));
          std::int64_t extreme = want_max ? *std::max_element(ns.begin(), ns.end())
                                          : *std::min_element(ns.begin(), ns.end());
          if (std::count(ns.begin(), ns.end(), extreme) != 1) continue;
          QuestionBinding b;
          b.template_id = 8;
          b.skill = Skill::INTER_ENTITY_SUPERLATIVE;
          b.containers = holders;
          b.entity = e;
          b.attribute = a;
          b.want_max = want_max;
          candidates.push_back(std::move(b));
        }
        break;
      }
      case 9:
      case 10: {
        bool env = qt.id == 9;
        bool want_max = rng.bernoulli(0.5);
        std::set<std::tuple<std::string, std::string, std::string, std::string>> group_seen;
        for (const WorldEvent& ev : world.events()) {
          if (ev.verb != Verb::POS || ev.word.empty()) continue;
          if (is_env(world, ev.container) != env) continue;
          if (!passage.verb_bases.count(ev.word)) continue;
          for (const std::string& a : {std::string{}, ev.attribute}) {
            if (!group_seen.insert({ev.container, ev.word, ev.entity, a}).second) continue;
            int matches = 0;
            for (const WorldEvent& other : world.events())
              if (event_matches(other, ev.container, ev.entity, a) && other.word == ev.word)
                ++matches;
            if (matches < 2) continue;
            QuestionBinding b;
            b.template_id = qt.id;
            b.skill = Skill::INTRA_ENTITY_SUPERLATIVE;
            b.containers = {ev.container};
            b.entity = ev.entity;
            b.attribute = a;
            b.want_max = want_max;
            b.verb = VerbEntry{passage.verb_bases.at(ev.word), ev.word};
            candidates.push_back(std::move(b));
          }
        }
        break;
      }
      case 11:
      case 12: {
        bool combined = rng.bernoulli(0.5);
        std::set<std::pair<std::string, std::string>> asked_keys;
        for (const auto& [c, e, a] : view.options) {
          if (!is_env(world, c)) continue;
          if (!asked_keys.insert({e, a}).second) continue;
          std::vector<std::string> holders;
          for (const std::string& envc : view.envs)
            if (opt_total(world, envc, e, a) > 0) holders.push_back(envc);
          if (holders.size() < 2) continue;
          std::size_t take = 2 + rng.below(std::min<std::size_t>(holders.size(), 3) - 1);
          std::vector<std::size_t> idx = rng.sample_indices(holders.size(), take);
          std::sort(idx.begin(), idx.end());
          QuestionBinding b;
          b.template_id = qt.id;
          b.skill = Skill::INTER_ENTITY_SUM;
          for (std::size_t i : idx) b.containers.push_back(holders[i]);
          b.entity = e;
          b.attribute = a;
          b.complement = combined;
          candidates.push_back(std::move(b));
        }
        break;
      }
      default:
        break;
    }

    if (candidates.empty()) continue;
    QuestionBinding chosen = candidates[rng.below(candidates.size())];
    std::string question = render_question(chosen);
    if (!asked.insert(question).second) continue;
    Answer answer;
    try {
      answer = td_oracle(world, chosen);
    } catch (const AmbiguousBinding&) {
      continue;
    }
    QAPair qa;
    qa.question = std::move(question);
    qa.answer = std::move(answer);
    qa.skill = skill_name(chosen.skill);
    passage.qa_pairs.push_back(std::move(qa));
    passage.bindings.push_back(std::move(chosen));
  }
}

ordered_json td_record_json(const TdPassage& passage, std::size_t qa_index) {
  const QAPair& qa = passage.qa_pairs.at(qa_index);
  ordered_json j;
  j["passage"] = passage.passage_text();
  j["question"] = qa.question;
  j["answer"] = qa.answer.to_json();
  j["skill"] = qa.skill;
  return j;
}

}  // namespace numforge::td
