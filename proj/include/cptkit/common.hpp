#ifndef CPTKIT_COMMON_HPP
#define CPTKIT_COMMON_HPP

#include <bit>
#include <cstdint>

namespace cptkit {

/// Subsets of a state space, encoded as bitmasks over state indices
/// (bit i set  <=>  state i belongs to the subset).
using SubsetMask = std::uint32_t;

/// Hard cap on the number of states: subset tables have 2^n entries and
/// every check enumerates them, so this keeps everything desk-scale.
inline constexpr int kMaxStates = 16;

/// Comparison slack shared by all numeric checks. Violations smaller than
/// this are treated as equality; most operations accept an override.
inline constexpr double kDefaultTolerance = 1e-9;

inline int subset_size(SubsetMask m) { return std::popcount(m); }

inline bool subset_of(SubsetMask a, SubsetMask b) { return (a & ~b) == 0; }

inline SubsetMask state_bit(int index) { return SubsetMask{1} << index; }

}  // namespace cptkit

#endif
