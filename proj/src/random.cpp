#include "cptkit/random.hpp"

#include <algorithm>
#include <numeric>

namespace cptkit {

std::vector<int> Rng::permutation(int n) {
  std::vector<int> out(n);
  std::iota(out.begin(), out.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    const int j = uniform_int(0, i);
    std::swap(out[i], out[j]);
  }
  return out;
}

Capacity random_capacity(const StateSpace& space, Rng& rng) {
  const std::uint32_t count = space.subset_count();
  std::vector<double> running(count, 0.0);
  for (SubsetMask m = 1; m < count; ++m) {
    double best = rng.uniform();
    for (int i = 0; i < space.size(); ++i) {
      const SubsetMask bit = state_bit(i);
      if (m & bit) best = std::max(best, running[m & ~bit]);
    }
    running[m] = best;
  }
  const double top = running[count - 1];
  std::vector<double> table(count, 0.0);
  for (SubsetMask m = 1; m < count; ++m) table[m] = running[m] / top;
  return Capacity::validate(space, std::move(table));
}

Act random_act(const StateSpace& space, Rng& rng, double lo, double hi) {
  std::vector<double> payoffs(space.size());
  for (double& x : payoffs) x = rng.uniform(lo, hi);
  return Act(space, std::move(payoffs));
}

std::pair<Act, Act> random_comonotone_pair(const StateSpace& space, Rng& rng, double lo,
                                           double hi) {
  const int n = space.size();
  const std::vector<int> order = rng.permutation(n);
  auto sorted_payoffs = [&] {
    std::vector<double> values(n);
    for (double& x : values) x = rng.uniform(lo, hi);
    std::sort(values.begin(), values.end());
    std::vector<double> payoffs(n);
    for (int rank = 0; rank < n; ++rank) payoffs[order[rank]] = values[rank];
    return payoffs;
  };
  return {Act(space, sorted_payoffs()), Act(space, sorted_payoffs())};
}

CptParams random_cpt_params(const StateSpace& space, Rng& rng, double lambda_lo,
                            double lambda_hi) {
  Capacity gains = random_capacity(space, rng);
  Capacity losses = random_capacity(space, rng);
  return CptParams(std::move(gains), std::move(losses), rng.uniform(lambda_lo, lambda_hi));
}

}  // namespace cptkit
