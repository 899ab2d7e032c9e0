#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace numforge {

// Sentence semantics are abstracted to six verb categories.
enum class Verb { OBS, POS, NEG, POS_TRN, NEG_TRN, DESTROY };

const std::string& verb_name(Verb v);
std::optional<Verb> verb_from_name(std::string_view name);

enum class ContainerKind { AGT, ENV };

// Attribute wildcard for totals across all attributes of an entity.
inline const std::string kAnyAttr = "*";

struct WorldEvent {
  Verb verb = Verb::OBS;
  std::string container;              // acting / asserted container
  std::string other;                  // transfer peer (POS_TRN / NEG_TRN only)
  std::string entity;
  std::string attribute;              // may be empty for unattributed counts
  std::int64_t amount = 0;
  std::string word;                   // surface verb (past form); informational

  bool operator==(const WorldEvent& o) const = default;
};

class NegativeCountError : public std::runtime_error {
 public:
  explicit NegativeCountError(const std::string& what) : std::runtime_error(what) {}
};

// Count ledger over (container, entity, attribute) triples. Containers are
// either agents (AGT) or environments (ENV); an ENV may have one ENV parent,
// and every delta applied to a child ENV is mirrored into its parent, so a
// query against the parent sees child contributions exactly once.
class WorldState {
 public:
  // Registration is idempotent; re-registering with a different kind/parent throws.
  void register_container(const std::string& name, ContainerKind kind,
                          const std::string& parent = "");

  bool is_registered(const std::string& name) const { return containers_.count(name) > 0; }
  ContainerKind kind_of(const std::string& name) const;
  const std::string& parent_of(const std::string& name) const;  // "" if none

  // Applies the event, mutating counts and appending to the log.
  // OBS asserts the count (overwrite); POS adds; NEG and DESTROY subtract;
  // POS_TRN moves amount from `other` into `container`; NEG_TRN moves it
  // from `container` into `other`.
  void apply(const WorldEvent& event);

  // Like apply, but leaves the state untouched and returns false instead of
  // throwing when any count would go negative.
  bool try_apply(const WorldEvent& event);

  // Current count; attribute kAnyAttr sums over all attributes.
  std::int64_t total(const std::string& container, const std::string& entity,
                     const std::string& attribute = kAnyAttr) const;

  const std::vector<WorldEvent>& events() const { return events_; }

  // All (container, entity, attribute) keys with a nonzero count. Parent
  // containers appear with their mirrored totals.
  std::vector<std::tuple<std::string, std::string, std::string>> keys() const;

  // Rebuilds a state from this one's registry and event log; equal counts
  // witness the replay invariant.
  WorldState replayed() const;

  bool counts_equal(const WorldState& o) const { return counts_ == o.counts_; }

 private:
  struct ContainerInfo {
    ContainerKind kind;
    std::string parent;
  };

  void add_direct(const std::string& container, const std::string& entity,
                  const std::string& attribute, std::int64_t delta);
  std::int64_t direct(const std::string& container, const std::string& entity,
                      const std::string& attribute) const;
  // Signed per-container deltas an event implies, before mirroring.
  std::vector<std::pair<std::string, std::int64_t>> deltas(const WorldEvent& event) const;

  std::map<std::string, ContainerInfo> containers_;
  std::map<std::tuple<std::string, std::string, std::string>, std::int64_t> counts_;
  std::vector<WorldEvent> events_;
};

}  // namespace numforge
