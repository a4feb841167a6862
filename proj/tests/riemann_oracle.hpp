#ifndef CPTKIT_RIEMANN_ORACLE_HPP
#define CPTKIT_RIEMANN_ORACLE_HPP

#include <algorithm>

#include "cptkit/act.hpp"
#include "cptkit/capacity.hpp"

namespace cptkit_test {

// Independent oracle for the Choquet integral: midpoint Riemann sum of
// the two-piece survival-function integral
//   int_{-inf}^0 (v({f >= t}) - 1) dt + int_0^{inf} v({f >= t}) dt,
// discretized over [min f, max f]. Outside that interval the integrand
// is constant (1 below min when min > 0, -1 above max when max < 0) and
// is added in closed form. The survival function is a monotone step
// function with total variation <= 1, so the midpoint error is at most
// (max - min) / steps. Deliberately ignorant of the layer formula.
inline double riemann_choquet(const cptkit::Act& f, const cptkit::Capacity& v, long steps) {
  using cptkit::SubsetMask;
  const auto& x = f.payoffs();
  const double lo = *std::min_element(x.begin(), x.end());
  const double hi = *std::max_element(x.begin(), x.end());
  const double base = (lo > 0.0 ? lo : 0.0) + (hi < 0.0 ? hi : 0.0);
  if (hi <= lo) return base;
  const double width = (hi - lo) / static_cast<double>(steps);
  double acc = 0.0;
  for (long k = 0; k < steps; ++k) {
    const double t = lo + (static_cast<double>(k) + 0.5) * width;
    SubsetMask m = 0;
    for (int i = 0; i < f.size(); ++i) {
      if (x[i] >= t) m |= cptkit::state_bit(i);
    }
    const double survival = v.value(m);
    acc += (t < 0.0) ? survival - 1.0 : survival;
  }
  return base + acc * width;
}

}  // namespace cptkit_test

#endif
