#include "cptkit/act.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cptkit/errors.hpp"

namespace cptkit {

Act::Act(StateSpace space, std::vector<double> payoffs)
    : space_(std::move(space)), payoffs_(std::move(payoffs)) {
  if (payoffs_.size() != static_cast<std::size_t>(space_.size())) {
    throw InvalidActError("act has " + std::to_string(payoffs_.size()) + " payoffs on a space of " +
                          std::to_string(space_.size()) + " states");
  }
  for (double x : payoffs_) {
    if (!std::isfinite(x)) {
      throw InvalidActError("act payoffs must be finite");
    }
  }
}

Act Act::zero(const StateSpace& space) { return constant(space, 0.0); }

Act Act::constant(const StateSpace& space, double value) {
  return Act(space, std::vector<double>(space.size(), value));
}

Act Act::indicator(const StateSpace& space, SubsetMask subset) {
  std::vector<double> payoffs(space.size(), 0.0);
  for (int i = 0; i < space.size(); ++i) {
    if (subset & state_bit(i)) payoffs[i] = 1.0;
  }
  return Act(space, std::move(payoffs));
}

void require_same_space(const Act& f, const Act& g) {
  if (f.space() != g.space()) {
    throw SpaceMismatchError("acts live on different state spaces");
  }
}

Act positive_part(const Act& f) {
  std::vector<double> out(f.payoffs());
  for (double& x : out) x = x > 0.0 ? x : 0.0;  // avoids -0.0 entries
  return Act(f.space(), std::move(out));
}

Act negative_part(const Act& f) {
  std::vector<double> out(f.payoffs());
  for (double& x : out) x = x < 0.0 ? -x : 0.0;
  return Act(f.space(), std::move(out));
}

SubsetMask support(const Act& f) {
  SubsetMask m = 0;
  for (int i = 0; i < f.size(); ++i) {
    if (f[i] != 0.0) m |= state_bit(i);
  }
  return m;
}

bool is_nonnegative(const Act& f) {
  return std::all_of(f.payoffs().begin(), f.payoffs().end(), [](double x) { return x >= 0.0; });
}

bool is_nonpositive(const Act& f) {
  return std::all_of(f.payoffs().begin(), f.payoffs().end(), [](double x) { return x <= 0.0; });
}

bool is_comonotonic(const Act& f, const Act& g) {
  require_same_space(f, g);
  const int n = f.size();
  // Sign logic instead of products: immune to overflow for huge payoffs.
  for (int s = 0; s < n; ++s) {
    for (int t = s + 1; t < n; ++t) {
      const bool f_up = f[s] > f[t];
      const bool f_down = f[s] < f[t];
      const bool g_up = g[s] > g[t];
      const bool g_down = g[s] < g[t];
      if ((f_up && g_down) || (f_down && g_up)) return false;
    }
  }
  return true;
}

bool is_cosigned(const Act& f, const Act& g) {
  if (!is_comonotonic(f, g)) return false;
  for (int s = 0; s < f.size(); ++s) {
    if ((f[s] > 0.0 && g[s] < 0.0) || (f[s] < 0.0 && g[s] > 0.0)) return false;
  }
  return true;
}

bool have_disjoint_supports(const Act& f, const Act& g) {
  require_same_space(f, g);
  return (support(f) & support(g)) == 0;
}

Act operator+(const Act& f, const Act& g) {
  require_same_space(f, g);
  std::vector<double> out(f.payoffs());
  for (int i = 0; i < g.size(); ++i) out[i] += g[i];
  return Act(f.space(), std::move(out));
}

Act operator-(const Act& f, const Act& g) {
  require_same_space(f, g);
  std::vector<double> out(f.payoffs());
  for (int i = 0; i < g.size(); ++i) out[i] -= g[i];
  return Act(f.space(), std::move(out));
}

Act operator-(const Act& f) {
  std::vector<double> out(f.payoffs());
  for (double& x : out) x = -x;
  return Act(f.space(), std::move(out));
}

Act operator*(double scale, const Act& f) {
  std::vector<double> out(f.payoffs());
  for (double& x : out) x *= scale;
  return Act(f.space(), std::move(out));
}

}  // namespace cptkit
