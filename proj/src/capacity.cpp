#include "cptkit/capacity.hpp"

#include <cmath>
#include <string>

#include "cptkit/errors.hpp"

namespace cptkit {

namespace {

void check_table(const StateSpace& space, const std::vector<double>& table, double tol) {
  const std::uint32_t count = space.subset_count();
  if (table.size() != count) {
    throw MissingSubsetError("capacity table has " + std::to_string(table.size()) +
                             " entries, expected " + std::to_string(count));
  }
  for (double x : table) {
    if (!std::isfinite(x)) throw CapacityError("capacity values must be finite");
  }
  const SubsetMask full = space.full_mask();
  if (std::abs(table[0]) > tol) {
    throw NotNormalizedError("v({}) = " + std::to_string(table[0]) + ", expected 0", 0, table[0]);
  }
  if (std::abs(table[full] - 1.0) > tol) {
    throw NotNormalizedError("v(" + space.subset_label(full) + ") = " + std::to_string(table[full]) +
                                 ", expected 1",
                             full, table[full]);
  }
  // Monotone along single-element extensions, which chains to all pairs.
  for (SubsetMask m = 0; m < count; ++m) {
    for (int i = 0; i < space.size(); ++i) {
      const SubsetMask bit = state_bit(i);
      if (m & bit) continue;
      const SubsetMask bigger = m | bit;
      if (table[m] > table[bigger] + tol) {
        throw NotMonotoneError("v(" + space.subset_label(m) + ") = " + std::to_string(table[m]) +
                                   " exceeds v(" + space.subset_label(bigger) +
                                   ") = " + std::to_string(table[bigger]),
                               m, bigger, table[m], table[bigger]);
      }
    }
  }
}

}  // namespace

Capacity Capacity::validate(StateSpace space, std::vector<double> table, double tolerance) {
  check_table(space, table, tolerance);
  return Capacity(std::move(space), std::move(table), std::nullopt);
}

Capacity Capacity::validate(StateSpace space, std::vector<double> table,
                            std::vector<Rational> exact_table, double tolerance) {
  check_table(space, table, tolerance);
  if (exact_table.size() != table.size()) {
    throw MissingSubsetError("exact capacity table size mismatch");
  }
  return Capacity(std::move(space), std::move(table), std::move(exact_table));
}

Capacity Capacity::additive(const StateSpace& space, const std::vector<double>& weights,
                            double tolerance) {
  if (weights.size() != static_cast<std::size_t>(space.size())) {
    throw CapacityError("need one weight per state");
  }
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw CapacityError("weights must be nonnegative");
    total += w;
  }
  if (std::abs(total - 1.0) > tolerance) {
    throw CapacityError("weights sum to " + std::to_string(total) + ", expected 1");
  }
  std::vector<double> table(space.subset_count(), 0.0);
  for (SubsetMask m = 1; m < space.subset_count(); ++m) {
    double sum = 0.0;
    for (int i = 0; i < space.size(); ++i) {
      if (m & state_bit(i)) sum += weights[i];
    }
    table[m] = sum;
  }
  table[space.full_mask()] = 1.0;  // absorb the rounding of the full sum
  return validate(space, std::move(table), tolerance);
}

Capacity conjugate(const Capacity& v) {
  const StateSpace& space = v.space();
  const SubsetMask full = space.full_mask();
  std::vector<double> table(v.table().size());
  for (SubsetMask m = 0; m <= full; ++m) {
    table[m] = 1.0 - v.value(full & ~m);
  }
  std::optional<std::vector<Rational>> exact;
  if (v.exact_table()) {
    exact.emplace(v.exact_table()->size());
    const Rational one = Rational::from_integer(1);
    for (SubsetMask m = 0; m <= full; ++m) {
      (*exact)[m] = one - (*v.exact_table())[full & ~m];
    }
  }
  // 1 - x is exact at the endpoints and order-reversing, so the result is
  // a valid capacity by construction.
  return Capacity(space, std::move(table), std::move(exact));
}

namespace {

ConvexityResult scan_pairs(const Capacity& v, double tolerance, bool convex) {
  const std::uint32_t count = v.space().subset_count();
  for (SubsetMask a = 0; a < count; ++a) {
    for (SubsetMask b = a + 1; b < count; ++b) {
      if (subset_of(a, b) || subset_of(b, a)) continue;  // equality, skip
      const double gap = v.value(a | b) + v.value(a & b) - v.value(a) - v.value(b);
      const double signed_gap = convex ? gap : -gap;
      if (signed_gap < -tolerance) {
        return ConvexityResult{false, ConvexityWitness{a, b, gap}};
      }
    }
  }
  return ConvexityResult{true, std::nullopt};
}

}  // namespace

ConvexityResult is_convex(const Capacity& v, double tolerance) {
  return scan_pairs(v, tolerance, true);
}

ConvexityResult is_concave(const Capacity& v, double tolerance) {
  return scan_pairs(v, tolerance, false);
}

}  // namespace cptkit
