#ifndef CPTKIT_ACT_HPP
#define CPTKIT_ACT_HPP

#include <vector>

#include "cptkit/common.hpp"
#include "cptkit/state_space.hpp"

namespace cptkit {

/// A real payoff vector over a state space. Immutable after construction;
/// all entries are required to be finite.
class Act {
 public:
  Act(StateSpace space, std::vector<double> payoffs);

  static Act zero(const StateSpace& space);
  static Act constant(const StateSpace& space, double value);
  /// Pays 1 on the subset and 0 elsewhere.
  static Act indicator(const StateSpace& space, SubsetMask subset);

  const StateSpace& space() const { return space_; }
  const std::vector<double>& payoffs() const { return payoffs_; }
  double operator[](int index) const { return payoffs_[index]; }
  int size() const { return static_cast<int>(payoffs_.size()); }

 private:
  StateSpace space_;
  std::vector<double> payoffs_;
};

/// max(f, 0) pointwise.
Act positive_part(const Act& f);
/// max(-f, 0) pointwise; f == positive_part(f) - negative_part(f).
Act negative_part(const Act& f);

/// States with payoff != 0, compared exactly (acts are user data, not
/// computed quantities).
SubsetMask support(const Act& f);

bool is_nonnegative(const Act& f);
bool is_nonpositive(const Act& f);

/// True iff no pair of states is ranked in opposite order by f and g:
/// (f(s)-f(t))(g(s)-g(t)) >= 0 for all s, t. Throws on space mismatch.
bool is_comonotonic(const Act& f, const Act& g);

/// Comonotonic, and no state where the payoffs take strictly opposite
/// signs (checked in both directions).
bool is_cosigned(const Act& f, const Act& g);

bool have_disjoint_supports(const Act& f, const Act& g);

Act operator+(const Act& f, const Act& g);
Act operator-(const Act& f, const Act& g);
Act operator-(const Act& f);
Act operator*(double scale, const Act& f);

/// Throws SpaceMismatchError unless both acts live on the same space.
void require_same_space(const Act& f, const Act& g);

}  // namespace cptkit

#endif
