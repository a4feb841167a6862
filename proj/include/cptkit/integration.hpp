#ifndef CPTKIT_INTEGRATION_HPP
#define CPTKIT_INTEGRATION_HPP

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <vector>

#include "cptkit/act.hpp"
#include "cptkit/capacity.hpp"
#include "cptkit/common.hpp"

namespace cptkit {

/// Parameters of the piecewise-linear cumulative-prospect functional:
/// gains weighted by v_plus, losses by v_minus and scaled by lambda > 0.
class CptParams {
 public:
  CptParams(Capacity v_plus, Capacity v_minus, double lambda);
  CptParams(Capacity v_plus, Capacity v_minus, double lambda, std::optional<Rational> exact_lambda);

  const Capacity& v_plus() const { return v_plus_; }
  const Capacity& v_minus() const { return v_minus_; }
  double lambda() const { return lambda_; }
  const std::optional<Rational>& exact_lambda() const { return exact_lambda_; }
  const StateSpace& space() const { return v_plus_.space(); }

 private:
  Capacity v_plus_;
  Capacity v_minus_;
  double lambda_;
  std::optional<Rational> exact_lambda_;
};

/// Parameters under which the CPT functional is the Sipos integral of v:
/// lambda = 1 and the same capacity on both sides.
CptParams sipos_params(const Capacity& v);

/// Parameters under which the CPT functional coincides with the Choquet
/// integral of v: lambda = 1, gains under v, losses under the conjugate.
CptParams choquet_params(const Capacity& v);

namespace detail {

/// Sorted layer sum shared by the double and exact-rational paths:
/// with payoffs sorted ascending x(1) <= ... <= x(n),
///   x(1) + sum_{i>=2} (x(i) - x(i-1)) * v({s : x_s >= x(i)}).
/// Ties are ordered stably by state index; equal payoffs contribute
/// zero-width layers, so the value is tie-order independent.
template <class Scalar, class CapacityFn>
Scalar choquet_layer_sum(const std::vector<Scalar>& payoffs, CapacityFn value_of) {
  const int n = static_cast<int>(payoffs.size());
  std::array<int, kMaxStates> order{};
  std::iota(order.begin(), order.begin() + n, 0);
  std::sort(order.begin(), order.begin() + n, [&](int a, int b) {
    if (payoffs[a] < payoffs[b]) return true;
    if (payoffs[b] < payoffs[a]) return false;
    return a < b;
  });
  Scalar total = payoffs[order[0]];
  for (int k = 1; k < n; ++k) {
    const Scalar& lo = payoffs[order[k - 1]];
    const Scalar& hi = payoffs[order[k]];
    if (!(lo < hi)) continue;
    SubsetMask level = 0;
    for (int i = 0; i < n; ++i) {
      if (payoffs[i] >= hi) level |= state_bit(i);
    }
    total += (hi - lo) * value_of(level);
  }
  return total;
}

}  // namespace detail

/// Choquet integral of f with respect to v (sorted layer formula).
double choquet(const Act& f, const Capacity& v);

/// Sipos integral: Choquet of the positive part minus Choquet of the
/// negative part, both under the same capacity.
double sipos(const Act& f, const Capacity& v);

/// CPT value: choquet(f+, v+) - lambda * choquet(f-, v-).
double cpt(const Act& f, const CptParams& p);

/// The constant c with cpt(c * 1_S, p) == cpt(f, p): the value itself when
/// nonnegative, otherwise the value divided by lambda.
double certainty_equivalent(const Act& f, const CptParams& p);

/// cpt(f+g) - cpt(f) - cpt(g): zero exactly where the functional is
/// additive, positive where combining the acts hedges.
double hedging_gap(const Act& f, const Act& g, const CptParams& p);

/// Exact-rational CPT value for lossless reporting. Needs exact shadows on
/// both capacities and on lambda; returns nullopt when any is missing or
/// the arithmetic overflows.
std::optional<Rational> cpt_exact(const std::vector<Rational>& payoffs, const CptParams& p);
std::optional<Rational> certainty_equivalent_exact(const std::vector<Rational>& payoffs,
                                                   const CptParams& p);

}  // namespace cptkit

#endif
