#ifndef CPTKIT_STATE_SPACE_HPP
#define CPTKIT_STATE_SPACE_HPP

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "cptkit/common.hpp"

namespace cptkit {

/// An ordered finite set of named states. Immutable; copies share storage.
///
/// Everything else in the library (acts, capacities, oracles) is indexed
/// against one of these. Two spaces compare equal when their label lists
/// are equal, so value round-trips through files preserve identity.
class StateSpace {
 public:
  /// Labels must be non-empty, pairwise distinct, and at most kMaxStates.
  explicit StateSpace(std::vector<std::string> labels);

  int size() const { return static_cast<int>(impl_->labels.size()); }
  const std::vector<std::string>& labels() const { return impl_->labels; }
  const std::string& label(int index) const { return impl_->labels.at(index); }

  /// Index of a label; throws InvalidStateSpaceError if unknown.
  int index_of(std::string_view label) const;
  bool has_label(std::string_view label) const;

  SubsetMask full_mask() const { return (SubsetMask{1} << size()) - 1; }
  std::uint32_t subset_count() const { return SubsetMask{1} << size(); }
  SubsetMask complement(SubsetMask m) const { return full_mask() & ~m; }

  /// Comma-joined labels of a subset, in state order; "{}" for the empty set.
  std::string subset_label(SubsetMask m) const;

  friend bool operator==(const StateSpace& a, const StateSpace& b) {
    return a.impl_ == b.impl_ || a.impl_->labels == b.impl_->labels;
  }
  friend bool operator!=(const StateSpace& a, const StateSpace& b) { return !(a == b); }

 private:
  struct Impl {
    std::vector<std::string> labels;
  };
  std::shared_ptr<const Impl> impl_;
};

}  // namespace cptkit

#endif
