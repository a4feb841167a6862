#include "cptkit/representation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cptkit/errors.hpp"
#include "cptkit/random.hpp"

namespace cptkit {

namespace {

std::string payoffs_string(const Act& f) {
  std::string out = "(";
  for (int i = 0; i < f.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(f[i]);
  }
  return out + ")";
}

}  // namespace

FunctionalOracle::FunctionalOracle(StateSpace space, std::function<double(const Act&)> eval,
                                   double tolerance)
    : space_(std::move(space)), eval_(std::move(eval)) {
  if (!eval_) throw OracleError("oracle evaluator is empty");
  const Act unit = Act::constant(space_, 1.0);
  const double first = eval_(unit);
  const double second = eval_(unit);
  if (first != second) {
    throw OracleError("oracle is not deterministic: I(1_S) returned " + std::to_string(first) +
                      " then " + std::to_string(second));
  }
  if (!std::isfinite(first) || std::abs(first - 1.0) > tolerance) {
    throw OracleError("oracle must satisfy I(1_S) = 1, got " + std::to_string(first));
  }
}

double FunctionalOracle::operator()(const Act& f) const {
  if (f.space() != space_) {
    throw SpaceMismatchError("act evaluated against an oracle on a different state space");
  }
  const double value = eval_(f);
  if (!std::isfinite(value)) throw OracleError("oracle returned a non-finite value");
  return value;
}

FunctionalOracle make_choquet_oracle(Capacity v) {
  StateSpace space = v.space();
  return FunctionalOracle(std::move(space),
                          [v = std::move(v)](const Act& f) { return choquet(f, v); });
}

FunctionalOracle make_sipos_oracle(Capacity v) {
  StateSpace space = v.space();
  return FunctionalOracle(std::move(space),
                          [v = std::move(v)](const Act& f) { return sipos(f, v); });
}

FunctionalOracle make_cpt_oracle(CptParams p) {
  StateSpace space = p.space();
  return FunctionalOracle(std::move(space),
                          [p = std::move(p)](const Act& f) { return cpt(f, p); });
}

std::vector<Act> integer_grid_acts(const StateSpace& space, int lo, int hi) {
  if (hi < lo) throw Error("empty payoff grid");
  const int n = space.size();
  const int values = hi - lo + 1;
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) total *= static_cast<std::size_t>(values);
  std::vector<Act> acts;
  acts.reserve(total);
  std::vector<int> digits(n, 0);
  for (std::size_t k = 0; k < total; ++k) {
    std::vector<double> payoffs(n);
    for (int i = 0; i < n; ++i) payoffs[i] = lo + digits[i];
    acts.emplace_back(space, std::move(payoffs));
    for (int i = 0; i < n; ++i) {
      if (++digits[i] < values) break;
      digits[i] = 0;
    }
  }
  return acts;
}

std::vector<Act> layer_decomposition(const Act& f) {
  const StateSpace& space = f.space();
  for (int i = 0; i < f.size(); ++i) {
    if (f[i] > 0.0) {
      throw PositiveEntryError("layer decomposition needs a nonpositive act; payoff " +
                               std::to_string(f[i]) + " at state " + space.label(i));
    }
  }
  std::vector<double> levels(f.payoffs());
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  std::vector<Act> layers;
  layers.reserve(levels.size());
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const double width = (i + 1 < levels.size() ? levels[i + 1] : 0.0) - levels[i];
    std::vector<double> payoffs(f.size(), 0.0);
    for (int s = 0; s < f.size(); ++s) {
      if (f[s] <= levels[i]) payoffs[s] = -width;
    }
    layers.emplace_back(space, std::move(payoffs));
  }
  return layers;
}

namespace {

std::vector<Act> verification_acts(const FunctionalOracle& oracle,
                                   const VerificationConfig& config) {
  const StateSpace& space = oracle.space();
  if (space.size() <= 3) {
    return integer_grid_acts(space, config.grid_min, config.grid_max);
  }
  Rng rng(config.seed);
  std::vector<Act> acts;
  acts.reserve(config.random_acts);
  for (std::size_t k = 0; k < config.random_acts; ++k) {
    acts.push_back(random_act(space, rng, -config.payoff_range, config.payoff_range));
  }
  return acts;
}

}  // namespace

ExtractionResult extract_cpt(const FunctionalOracle& oracle, const VerificationConfig& config) {
  const StateSpace& space = oracle.space();
  const double tol = config.tolerance;
  const std::uint32_t count = space.subset_count();

  const double lambda = -oracle(-Act::constant(space, 1.0));
  if (!(lambda > tol)) {
    throw DegenerateLambdaError(
        "-I(-1_S) = " + std::to_string(lambda) + " is not strictly positive", lambda);
  }

  std::vector<double> gains(count), losses(count);
  for (SubsetMask m = 0; m < count; ++m) {
    const Act one_a = Act::indicator(space, m);
    gains[m] = oracle(one_a);
    losses[m] = -oracle(-one_a) / lambda;
  }

  auto validated = [&](std::vector<double> table, const char* side) {
    try {
      return Capacity::validate(space, std::move(table), tol);
    } catch (const CapacityError& e) {
      throw InvalidCapacityError(std::string("extracted ") + side +
                                 " table is not a capacity: " + e.what());
    }
  };
  CptParams params(validated(std::move(gains), "gain"), validated(std::move(losses), "loss"),
                   lambda);

  double max_deviation = 0.0;
  std::size_t checked = 0;
  for (const Act& f : verification_acts(oracle, config)) {
    const double deviation = std::abs(oracle(f) - cpt(f, params));
    ++checked;
    if (deviation > max_deviation) max_deviation = deviation;
    if (deviation > tol) {
      throw ReconstructionMismatchError(
          "oracle is not a CPT functional: reconstruction off by " + std::to_string(deviation) +
              " on act " + payoffs_string(f),
          f.payoffs(), deviation);
    }
  }
  return ExtractionResult{std::move(params), max_deviation, checked};
}

std::optional<PairClass> classify_pair(const Act& f, const Act& g) {
  if (!is_comonotonic(f, g)) return std::nullopt;
  const bool f_pos = is_nonnegative(f);
  const bool f_neg = is_nonpositive(f);
  const bool g_pos = is_nonnegative(g);
  const bool g_neg = is_nonpositive(g);
  if ((f_pos && g_pos) || (f_neg && g_neg)) return PairClass::same_sign_comonotone;
  if (((f_pos && g_neg) || (f_neg && g_pos)) && have_disjoint_supports(f, g)) {
    return PairClass::opposite_sign_disjoint;
  }
  return PairClass::general_comonotone;
}

const AdditivityClassStats& AdditivityReport::stats(PairClass c) const {
  switch (c) {
    case PairClass::same_sign_comonotone:
      return same_sign;
    case PairClass::opposite_sign_disjoint:
      return opposite_disjoint;
    default:
      return general;
  }
}

AdditivityClassStats& AdditivityReport::stats(PairClass c) {
  switch (c) {
    case PairClass::same_sign_comonotone:
      return same_sign;
    case PairClass::opposite_sign_disjoint:
      return opposite_disjoint;
    default:
      return general;
  }
}

namespace {

void test_pair(const FunctionalOracle& oracle, const Act& f, const Act& g, double tol,
               AdditivityReport& report) {
  const auto cls = classify_pair(f, g);
  if (!cls) {
    ++report.pairs_skipped;
    return;
  }
  auto& stats = report.stats(*cls);
  ++stats.pairs_tested;
  const double gap = oracle(f + g) - oracle(f) - oracle(g);
  if (std::abs(gap) > tol) {
    stats.violations.push_back(AdditivityViolation{f, g, gap});
  }
}

Act random_signed_comonotone(const StateSpace& space, Rng& rng, const std::vector<int>& order,
                             double lo, double hi) {
  const int n = space.size();
  std::vector<double> values(n);
  for (double& x : values) x = rng.uniform(lo, hi);
  std::sort(values.begin(), values.end());
  std::vector<double> payoffs(n);
  for (int rank = 0; rank < n; ++rank) payoffs[order[rank]] = values[rank];
  return Act(space, std::move(payoffs));
}

std::optional<SubsetMask> random_nonempty_subset_of(Rng& rng, SubsetMask pool) {
  if (pool == 0) return std::nullopt;
  // Draw until nonempty; the pool has at least one element so this halts
  // with probability one and quickly in practice.
  for (int attempt = 0; attempt < 64; ++attempt) {
    const SubsetMask m = static_cast<SubsetMask>(rng.next()) & pool;
    if (m != 0) return m;
  }
  return pool & (~pool + 1);  // lowest bit as a deterministic fallback
}

}  // namespace

AdditivityReport check_restricted_comonotonic_additivity(const FunctionalOracle& oracle,
                                                         const VerificationConfig& config) {
  const StateSpace& space = oracle.space();
  const double tol = config.tolerance;
  const int n = space.size();
  AdditivityReport report;

  if (n <= 3) {
    const std::vector<Act> grid = integer_grid_acts(space, config.grid_min, config.grid_max);
    std::vector<double> values(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) values[i] = oracle(grid[i]);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      for (std::size_t j = i; j < grid.size(); ++j) {
        const auto cls = classify_pair(grid[i], grid[j]);
        if (!cls) {
          ++report.pairs_skipped;
          continue;
        }
        auto& stats = report.stats(*cls);
        ++stats.pairs_tested;
        const double gap = oracle(grid[i] + grid[j]) - values[i] - values[j];
        if (std::abs(gap) > tol) {
          stats.violations.push_back(AdditivityViolation{grid[i], grid[j], gap});
        }
      }
    }
  }

  for (const auto& [f, g] : config.extra_pairs) {
    test_pair(oracle, f, g, tol, report);
  }

  // Seeded pairs, built per class from a shared ordering so they land in
  // the intended class (re-classified before testing regardless).
  Rng rng(config.seed);
  const double range = config.payoff_range;
  const std::size_t rounds = (config.random_pairs + 2) / 3;
  for (std::size_t k = 0; k < rounds; ++k) {
    const std::vector<int> order = rng.permutation(n);

    // Same sign: alternate gain-side and loss-side pairs.
    if (k % 2 == 0) {
      test_pair(oracle, random_signed_comonotone(space, rng, order, 0.0, range),
                random_signed_comonotone(space, rng, order, 0.0, range), tol, report);
    } else {
      test_pair(oracle, random_signed_comonotone(space, rng, order, -range, 0.0),
                random_signed_comonotone(space, rng, order, -range, 0.0), tol, report);
    }

    // Opposite sign with disjoint supports.
    const SubsetMask full = space.full_mask();
    SubsetMask gains_on = full, losses_on = 0;
    if (n >= 2) {
      // A proper nonempty subset and a nonempty piece of its complement.
      while (true) {
        const SubsetMask m = static_cast<SubsetMask>(rng.next()) & full;
        if (m != 0 && m != full) {
          gains_on = m;
          break;
        }
      }
      losses_on = *random_nonempty_subset_of(rng, full & ~gains_on);
    }
    std::vector<double> up(n, 0.0), down(n, 0.0);
    for (int i = 0; i < n; ++i) {
      if (gains_on & state_bit(i)) up[i] = rng.uniform(0.0, range);
      if (losses_on & state_bit(i)) down[i] = rng.uniform(-range, 0.0);
    }
    test_pair(oracle, Act(space, std::move(up)), Act(space, std::move(down)), tol, report);

    // General comonotone: opposite signs with overlapping supports, or a
    // fully mixed pair, both nondecreasing along the shared ordering.
    if (k % 2 == 0) {
      test_pair(oracle, random_signed_comonotone(space, rng, order, 0.0, range),
                random_signed_comonotone(space, rng, order, -range, 0.0), tol, report);
    } else {
      test_pair(oracle, random_signed_comonotone(space, rng, order, -range, range),
                random_signed_comonotone(space, rng, order, -range, range), tol, report);
    }
  }
  return report;
}

MonotonicityReport check_monotonicity(const FunctionalOracle& oracle,
                                      const VerificationConfig& config) {
  const StateSpace& space = oracle.space();
  const double tol = config.tolerance;
  MonotonicityReport report;
  Rng rng(config.seed);
  for (std::size_t k = 0; k < config.random_pairs; ++k) {
    const Act f = random_act(space, rng, -config.payoff_range, config.payoff_range);
    std::vector<double> lower(f.payoffs());
    for (double& x : lower) x -= rng.uniform(0.0, config.payoff_range);
    const Act g(space, std::move(lower));
    ++report.pairs_tested;
    const double gap = oracle(f) - oracle(g);
    if (gap < -tol) {
      report.violations.push_back(MonotonicityViolation{f, g, gap});
    }
  }
  return report;
}

SymmetryResult check_symmetry(const CptParams& p, double tolerance) {
  const StateSpace& space = p.space();
  auto witness_at = [&](const Act& w) {
    return SymmetryResult{false, w, cpt(-w, p) + cpt(w, p)};
  };
  if (std::abs(p.lambda() - 1.0) > tolerance) {
    return witness_at(Act::constant(space, 1.0));
  }
  for (SubsetMask m = 0; m < space.subset_count(); ++m) {
    if (std::abs(p.v_plus().value(m) - p.v_minus().value(m)) > tolerance) {
      return witness_at(Act::indicator(space, m));
    }
  }
  return SymmetryResult{true, std::nullopt, 0.0};
}

UncertaintyAttitudes check_uncertainty_attitudes(const CptParams& p, double tolerance) {
  UncertaintyAttitudes out;
  out.convex_gains = is_convex(p.v_plus(), tolerance).holds;
  out.convex_losses = is_convex(p.v_minus(), tolerance).holds;
  out.conjugate_loss_concave = is_concave(conjugate(p.v_minus()), tolerance).holds;
  return out;
}

}  // namespace cptkit
