#include "numforge/world.hpp"

#include <array>

namespace numforge {

namespace {
const std::array<std::string, 6> kVerbNames = {"OBS", "POS", "NEG", "POS_TRN", "NEG_TRN", "DESTROY"};
}

const std::string& verb_name(Verb v) { return kVerbNames[static_cast<int>(v)]; }

std::optional<Verb> verb_from_name(std::string_view name) {
  for (int i = 0; i < 6; ++i) {
    if (kVerbNames[i] == name) return static_cast<Verb>(i);
  }
  return std::nullopt;
}

void WorldState::register_container(const std::string& name, ContainerKind kind,
                                    const std::string& parent) {
  if (name.empty()) throw std::invalid_argument("container name empty");
  if (!parent.empty()) {
    if (kind != ContainerKind::ENV) throw std::invalid_argument("only ENV containers may nest");
    auto it = containers_.find(parent);
    if (it == containers_.end() || it->second.kind != ContainerKind::ENV)
      throw std::invalid_argument("parent must be a registered ENV container: " + parent);
    if (!it->second.parent.empty())
      throw std::invalid_argument("container nesting is limited to two levels");
    if (parent == name) throw std::invalid_argument("container cannot be its own parent");
  }
  auto [it, inserted] = containers_.emplace(name, ContainerInfo{kind, parent});
  if (!inserted && (it->second.kind != kind || it->second.parent != parent))
    throw std::invalid_argument("conflicting re-registration of container: " + name);
}

ContainerKind WorldState::kind_of(const std::string& name) const {
  auto it = containers_.find(name);
  if (it == containers_.end()) throw std::out_of_range("unregistered container: " + name);
  return it->second.kind;
}

const std::string& WorldState::parent_of(const std::string& name) const {
  auto it = containers_.find(name);
  if (it == containers_.end()) throw std::out_of_range("unregistered container: " + name);
  return it->second.parent;
}

std::int64_t WorldState::direct(const std::string& container, const std::string& entity,
                                const std::string& attribute) const {
  auto it = counts_.find(std::tie(container, entity, attribute));
  return it == counts_.end() ? 0 : it->second;
}

void WorldState::add_direct(const std::string& container, const std::string& entity,
                            const std::string& attribute, std::int64_t delta) {
  if (delta == 0) return;
  auto key = std::make_tuple(container, entity, attribute);
  auto it = counts_.find(key);
  if (it == counts_.end()) {
    counts_.emplace(std::move(key), delta);
  } else {
    it->second += delta;
    if (it->second == 0) counts_.erase(it);
  }
}

std::vector<std::pair<std::string, std::int64_t>> WorldState::deltas(
    const WorldEvent& event) const {
  if (event.amount < 0) throw std::invalid_argument("event amount must be non-negative");
  if (event.attribute == kAnyAttr) throw std::invalid_argument("event attribute cannot be the wildcard");
  if (!is_registered(event.container))
    throw std::invalid_argument("unregistered container: " + event.container);
  const bool transfer = event.verb == Verb::POS_TRN || event.verb == Verb::NEG_TRN;
  if (transfer && !is_registered(event.other))
    throw std::invalid_argument("unregistered transfer peer: " + event.other);

  std::vector<std::pair<std::string, std::int64_t>> base;
  switch (event.verb) {
    case Verb::OBS:
      base.emplace_back(event.container,
                        event.amount - direct(event.container, event.entity, event.attribute));
      break;
    case Verb::POS:
      base.emplace_back(event.container, event.amount);
      break;
    case Verb::NEG:
    case Verb::DESTROY:
      base.emplace_back(event.container, -event.amount);
      break;
    case Verb::POS_TRN:
      base.emplace_back(event.container, event.amount);
      base.emplace_back(event.other, -event.amount);
      break;
    case Verb::NEG_TRN:
      base.emplace_back(event.container, -event.amount);
      base.emplace_back(event.other, event.amount);
      break;
  }

  // Expand ENV parent mirrors, then aggregate per container so a transfer
  // touching both a child and its parent nets out before the sign check.
  std::vector<std::pair<std::string, std::int64_t>> expanded;
  for (const auto& [name, delta] : base) {
    expanded.emplace_back(name, delta);
    const ContainerInfo& info = containers_.at(name);
    if (info.kind == ContainerKind::ENV && !info.parent.empty())
      expanded.emplace_back(info.parent, delta);
  }
  std::vector<std::pair<std::string, std::int64_t>> merged;
  for (const auto& [name, delta] : expanded) {
    bool found = false;
    for (auto& [mname, mdelta] : merged) {
      if (mname == name) {
        mdelta += delta;
        found = true;
        break;
      }
    }
    if (!found) merged.emplace_back(name, delta);
  }
  return merged;
}

void WorldState::apply(const WorldEvent& event) {
  auto merged = deltas(event);
  for (const auto& [name, delta] : merged) {
    if (delta < 0 && direct(name, event.entity, event.attribute) + delta < 0)
      throw NegativeCountError("count would go negative: (" + name + ", " + event.entity + ", " +
                               event.attribute + ")");
  }
  for (const auto& [name, delta] : merged) add_direct(name, event.entity, event.attribute, delta);
  events_.push_back(event);
}

bool WorldState::try_apply(const WorldEvent& event) {
  auto merged = deltas(event);
  for (const auto& [name, delta] : merged) {
    if (delta < 0 && direct(name, event.entity, event.attribute) + delta < 0) return false;
  }
  for (const auto& [name, delta] : merged) add_direct(name, event.entity, event.attribute, delta);
  events_.push_back(event);
  return true;
}

std::int64_t WorldState::total(const std::string& container, const std::string& entity,
                               const std::string& attribute) const {
  if (attribute != kAnyAttr) return direct(container, entity, attribute);
  std::int64_t sum = 0;
  for (auto it = counts_.lower_bound(std::make_tuple(container, entity, std::string{}));
       it != counts_.end(); ++it) {
    const auto& [c, e, a] = it->first;
    if (c != container || e != entity) break;
    sum += it->second;
  }
  return sum;
}

std::vector<std::tuple<std::string, std::string, std::string>> WorldState::keys() const {
  std::vector<std::tuple<std::string, std::string, std::string>> out;
  out.reserve(counts_.size());
  for (const auto& [key, count] : counts_) {
    if (count != 0) out.push_back(key);
  }
  return out;
}

WorldState WorldState::replayed() const {
  WorldState fresh;
  fresh.containers_ = containers_;
  for (const WorldEvent& e : events_) fresh.apply(e);
  return fresh;
}

}  // namespace numforge
