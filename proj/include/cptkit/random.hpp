#ifndef CPTKIT_RANDOM_HPP
#define CPTKIT_RANDOM_HPP

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "cptkit/act.hpp"
#include "cptkit/capacity.hpp"
#include "cptkit/integration.hpp"

namespace cptkit {

/// Seeded generator with explicit bit-to-double mapping, so every sampled
/// object is reproducible from the seed across platforms (std::mt19937_64
/// is fully specified; the standard distributions are not, so we avoid
/// them).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [lo, hi], inclusive.
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  /// Fisher-Yates permutation of 0..n-1.
  std::vector<int> permutation(int n);

 private:
  std::mt19937_64 engine_;
};

/// A valid random capacity: independent uniforms per subset, running
/// maximum along inclusion chains, then division by the top value. Always
/// passes Capacity::validate.
Capacity random_capacity(const StateSpace& space, Rng& rng);

/// Payoffs drawn uniformly from [lo, hi].
Act random_act(const StateSpace& space, Rng& rng, double lo, double hi);

/// A comonotonic pair built from a shared state ordering: both acts are
/// nondecreasing along the same random permutation.
std::pair<Act, Act> random_comonotone_pair(const StateSpace& space, Rng& rng, double lo, double hi);

/// Random parameters with lambda uniform in [lambda_lo, lambda_hi] and
/// independent random capacities on both sides.
CptParams random_cpt_params(const StateSpace& space, Rng& rng, double lambda_lo, double lambda_hi);

}  // namespace cptkit

#endif
