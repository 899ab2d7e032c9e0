#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "numforge/answer.hpp"
#include "numforge/rng.hpp"
#include "numforge/world.hpp"

namespace numforge::td {

struct VerbEntry {
  std::string base;  // "recruit" (question form)
  std::string past;  // "recruited" (sentence form; doubles as participle)

  bool operator==(const VerbEntry& o) const = default;
};

// Small-world generation vocabulary (<100 words per domain).
struct Vocabulary {
  std::string domain;
  std::vector<std::string> agents;        // proper-noun AGT containers
  std::vector<std::string> environments;  // proper-noun ENV containers
  std::map<std::string, std::string> environment_parents;  // child ENV -> parent ENV
  std::vector<std::string> entities;      // plural nouns
  std::vector<std::string> attributes;    // entity modifiers
  std::vector<std::string> env_attributes;  // container decorations ("southern")
  std::map<Verb, std::vector<VerbEntry>> verbs;

  // Throws invalid_argument on empty categories or missing verb coverage
  // for the categories the shipped templates use.
  void validate() const;

  ordered_json to_json() const;
  static Vocabulary from_json(const ordered_json& j);
};

const Vocabulary& builtin_vocabulary(const std::string& domain);  // "history" | "nfl"

// One slot of a sentence template's slotted text.
struct Slot {
  enum class Type { LITERAL, CONT, NUM, ATTR, ENT, VERB };
  Type type = Type::LITERAL;
  std::string text;   // literal text, or the raw slot token
  int index = 0;      // the i in CONT-i / NUM-i / ...
  ContainerKind cont_kind = ContainerKind::AGT;  // CONT slots
  std::optional<Verb> verb_category;  // VERB slots; nullopt = wildcard
  bool decoration = false;  // ATTR slot directly modifying a CONT-ENV slot
};

// Declarative world-state semantics of one template clause. Slot names are
// referenced symbolically ("CONT-1", "NUM-2", "VERB-1"); a verb_slot of
// "OBS" marks literal-verb clauses ("had", "There were").
struct TemplateEvent {
  std::string verb_slot;
  std::string container_slot;
  std::string other_slot;  // transfer peer, if any
  std::string num_slot;
  std::string attr_slot;
  std::string ent_slot;
};

struct SentenceTemplate {
  std::string text;  // slotted source line
  std::vector<Slot> slots;
  std::vector<TemplateEvent> events;

  static SentenceTemplate parse(const std::string& text, std::vector<TemplateEvent> events);
  std::string to_string() const;  // joins slot tokens; round-trips `text`
};

// The 12 shipped sentence templates, with event semantics.
const std::vector<SentenceTemplate>& shipped_templates();

enum class Skill {
  SELECTION,
  INTRA_ENTITY_DIFFERENCE,
  INTRA_ENTITY_SUBSET,
  INTER_ENTITY_COMPARISON,
  INTER_ENTITY_SUPERLATIVE,
  INTRA_ENTITY_SUPERLATIVE,
  INTER_ENTITY_SUM,
};
inline constexpr int kSkillCount = 7;

const std::string& skill_name(Skill s);
std::optional<Skill> skill_from_name(std::string_view name);

struct QuestionTemplate {
  int id = 0;  // 0..12
  Skill skill = Skill::SELECTION;
  std::string pattern;  // slotted text, documentation and round-trip tests
};

// The 13 shipped question templates across the 7 skills.
const std::vector<QuestionTemplate>& shipped_questions();

// A fully resolved question instance. The oracle recomputes the answer from
// any world state reaching the same counts (e.g. a fresh event-log replay).
struct QuestionBinding {
  int template_id = 0;
  Skill skill = Skill::SELECTION;
  std::vector<std::string> containers;  // role depends on the template
  std::string entity;
  std::string attribute;   // "" = no modifier, count across all attributes
  std::string entity2;     // difference skill second operand
  std::string attribute2;
  bool want_max = true;    // more/highest vs less/lowest
  bool complement = false; // subset "not" variant; sum "combined" wording
  VerbEntry verb;          // verb-anchored templates
};

class AmbiguousBinding : public std::runtime_error {
 public:
  explicit AmbiguousBinding(const std::string& what) : std::runtime_error(what) {}
};

class Unsatisfiable : public std::runtime_error {
 public:
  explicit Unsatisfiable(const std::string& what) : std::runtime_error(what) {}
};

// Renders the binding through its question template.
std::string render_question(const QuestionBinding& b);

// Recomputes the answer by brute force over the world state (and its event
// log for verb-anchored skills). Throws AmbiguousBinding on ties.
Answer td_oracle(const WorldState& world, const QuestionBinding& b);

// Values already used in earlier sentences, per category; drives the
// "reuse with probability p" sampling. The coin is only free (and only
// counted in the stats) when both the pool and the vocabulary offer a
// candidate; forced choices bypass the stats so the measured rate stays an
// unbiased estimate of p.
class ReusePool {
 public:
  const std::vector<std::string>& values(const std::string& category) const;
  bool choose_reuse(bool pool_available, bool vocab_available, double p, Rng& rng);
  void note(const std::string& category, const std::string& value);

  std::uint64_t eligible() const { return eligible_; }
  std::uint64_t hits() const { return hits_; }

 private:
  std::map<std::string, std::vector<std::string>> pools_;
  std::uint64_t eligible_ = 0;
  std::uint64_t hits_ = 0;
};

struct InstantiatedSentence {
  std::string text;
  std::vector<WorldEvent> events;
};

struct TdConfig {
  std::uint64_t seed = 0;
  Vocabulary vocab;  // defaulted to the bundled history vocabulary if empty
  double reuse_p = 0.7;
  std::int64_t num_lo = 2;
  std::int64_t num_hi = 10000;
  int question_quota = 8;
  int min_sentences = 3;
  int max_sentences = 6;
};

struct TdPassage {
  std::vector<std::string> sentences;
  WorldState world;
  std::vector<QAPair> qa_pairs;
  std::vector<QuestionBinding> bindings;  // parallel to qa_pairs
  std::map<std::string, std::string> verb_bases;  // past form -> base form
  std::uint64_t reuse_eligible = 0;
  std::uint64_t reuse_hits = 0;

  std::string passage_text() const;
};

// Binds every slot (reuse with probability p per slot when the pool has
// candidates), builds the events, and verifies against `world` that no
// count would go negative. Throws Unsatisfiable after bounded resampling.
// Does not mutate `world`; accepted values are noted into the pool.
InstantiatedSentence instantiate_sentence(const SentenceTemplate& tmpl, const Vocabulary& vocab,
                                          ReusePool& pool, double p, Rng& rng,
                                          const WorldState& world,
                                          std::int64_t num_lo = 2, std::int64_t num_hi = 10000);

class TdGenerator {
 public:
  explicit TdGenerator(TdConfig config);

  // Deterministic in (config.seed, index); randomness derives from
  // hash(seed, "td", index) so parallel output equals sequential output.
  TdPassage generate(std::uint64_t index) const;

  const TdConfig& config() const { return config_; }

 private:
  TdConfig config_;
};

// Populates qa_pairs/bindings on the passage: up to quota non-duplicate
// questions with oracle-computed answers; degenerate bindings are skipped.
void gen_td_questions(TdPassage& passage, int quota, Rng& rng);

// JSONL record {passage, question, answer, skill}.
ordered_json td_record_json(const TdPassage& passage, std::size_t qa_index);

}  // namespace numforge::td
