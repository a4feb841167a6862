#include "cptkit/state_space.hpp"

#include <unordered_set>

#include "cptkit/errors.hpp"

namespace cptkit {

StateSpace::StateSpace(std::vector<std::string> labels) {
  if (labels.empty()) {
    throw InvalidStateSpaceError("state space needs at least one state");
  }
  if (labels.size() > static_cast<std::size_t>(kMaxStates)) {
    throw InvalidStateSpaceError("state space limited to " + std::to_string(kMaxStates) +
                                 " states, got " + std::to_string(labels.size()));
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& label : labels) {
    if (label.empty()) {
      throw InvalidStateSpaceError("state labels must be non-empty");
    }
    if (!seen.insert(label).second) {
      throw InvalidStateSpaceError("duplicate state label: " + label);
    }
  }
  impl_ = std::make_shared<const Impl>(Impl{std::move(labels)});
}

int StateSpace::index_of(std::string_view label) const {
  const auto& names = impl_->labels;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == label) return static_cast<int>(i);
  }
  throw InvalidStateSpaceError("unknown state label: " + std::string(label));
}

bool StateSpace::has_label(std::string_view label) const {
  for (const auto& name : impl_->labels) {
    if (name == label) return true;
  }
  return false;
}

std::string StateSpace::subset_label(SubsetMask m) const {
  if (m == 0) return "{}";
  std::string out;
  for (int i = 0; i < size(); ++i) {
    if (m & state_bit(i)) {
      if (!out.empty()) out += ',';
      out += label(i);
    }
  }
  return out;
}

}  // namespace cptkit
