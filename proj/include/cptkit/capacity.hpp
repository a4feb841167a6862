#ifndef CPTKIT_CAPACITY_HPP
#define CPTKIT_CAPACITY_HPP

#include <optional>
#include <vector>

#include "cptkit/common.hpp"
#include "cptkit/rational.hpp"
#include "cptkit/state_space.hpp"

namespace cptkit {

/// A normalized monotone set function over the full powerset of a state
/// space, stored as a dense table indexed by subset bitmask. Immutable.
///
/// Construction goes through validate(), which enforces v({}) = 0,
/// v(S) = 1 and monotonicity along single-element extensions, all with
/// `tolerance` slack so tables produced by floating-point arithmetic
/// (conjugation, oracle extraction) are accepted.
class Capacity {
 public:
  static Capacity validate(StateSpace space, std::vector<double> table,
                           double tolerance = kDefaultTolerance);

  /// Same checks, carrying an exact-rational shadow of the table for
  /// lossless output. The doubles must be the converted rationals.
  static Capacity validate(StateSpace space, std::vector<double> table,
                           std::vector<Rational> exact_table, double tolerance = kDefaultTolerance);

  /// An additive probability capacity from per-state weights (must be
  /// nonnegative and sum to 1 within tolerance).
  static Capacity additive(const StateSpace& space, const std::vector<double>& weights,
                           double tolerance = kDefaultTolerance);

  const StateSpace& space() const { return space_; }
  double value(SubsetMask subset) const { return table_[subset]; }
  const std::vector<double>& table() const { return table_; }
  const std::optional<std::vector<Rational>>& exact_table() const { return exact_table_; }

 private:
  Capacity(StateSpace space, std::vector<double> table, std::optional<std::vector<Rational>> exact)
      : space_(std::move(space)), table_(std::move(table)), exact_table_(std::move(exact)) {}

  friend Capacity conjugate(const Capacity& v);

  StateSpace space_;
  std::vector<double> table_;
  std::optional<std::vector<Rational>> exact_table_;
};

/// The conjugate capacity A -> 1 - v(complement of A). Involution; always
/// a valid capacity, so no re-validation happens.
Capacity conjugate(const Capacity& v);

struct ConvexityWitness {
  SubsetMask a;
  SubsetMask b;
  double gap;  // v(a|b) + v(a&b) - v(a) - v(b), negative for convexity failures
};

struct ConvexityResult {
  bool holds = false;
  std::optional<ConvexityWitness> witness;  // first failing pair in scan order
  explicit operator bool() const { return holds; }
};

/// v(A|B) + v(A&B) >= v(A) + v(B) over every subset pair, with
/// `tolerance` slack. Exhaustive scan; nested pairs hold trivially and
/// are pruned, symmetric pairs are visited once.
ConvexityResult is_convex(const Capacity& v, double tolerance = kDefaultTolerance);
/// Same with the inequality reversed.
ConvexityResult is_concave(const Capacity& v, double tolerance = kDefaultTolerance);

}  // namespace cptkit

#endif
