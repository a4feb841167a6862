#ifndef CPTKIT_REPRESENTATION_HPP
#define CPTKIT_REPRESENTATION_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "cptkit/act.hpp"
#include "cptkit/capacity.hpp"
#include "cptkit/common.hpp"
#include "cptkit/integration.hpp"

namespace cptkit {

/// A black-box functional on acts. Registration checks the two things the
/// verifiers rely on: the unit act evaluates to 1 (within tolerance) and
/// repeated evaluation returns identical values.
class FunctionalOracle {
 public:
  FunctionalOracle(StateSpace space, std::function<double(const Act&)> eval,
                   double tolerance = kDefaultTolerance);

  double operator()(const Act& f) const;
  const StateSpace& space() const { return space_; }

 private:
  StateSpace space_;
  std::function<double(const Act&)> eval_;
};

FunctionalOracle make_choquet_oracle(Capacity v);
FunctionalOracle make_sipos_oracle(Capacity v);
FunctionalOracle make_cpt_oracle(CptParams p);

/// How the verifiers sample acts. On spaces with at most 3 states the
/// integer grid {grid_min..grid_max}^n is enumerated exhaustively; larger
/// spaces fall back to seeded random sampling only.
struct VerificationConfig {
  double tolerance = kDefaultTolerance;
  int grid_min = -2;
  int grid_max = 2;
  std::size_t random_pairs = 10000;
  std::size_t random_acts = 10000;
  double payoff_range = 4.0;
  std::uint64_t seed = 1;
  /// Extra act pairs the additivity check must always classify and test.
  std::vector<std::pair<Act, Act>> extra_pairs;
};

/// All acts with integer payoffs in [lo, hi]^n, enumerated in odometer
/// order (first state fastest).
std::vector<Act> integer_grid_acts(const StateSpace& space, int lo, int hi);

/// Splits a nonpositive act into nonpositive indicator layers
/// h_i = (x_{i+1} - x_i) * (-1_{A_1 u ... u A_i}), where x_1 < ... < x_m
/// are the distinct payoff values, A_i their level sets, and x_{m+1} = 0.
/// The layers sum to the act and each one is comonotonic with the sum of
/// the layers after it. Throws PositiveEntryError on any payoff > 0.
std::vector<Act> layer_decomposition(const Act& f);

struct ExtractionResult {
  CptParams params;
  double max_deviation;       // max |I(f) - cpt(f, params)| over the verification acts
  std::size_t acts_checked;
};

/// Constructive CPT extraction from a black-box functional:
///   v+(A) = I(1_A),   lambda = -I(-1_S),   v-(A) = -I(-1_A) / lambda,
/// followed by capacity validation and a reconstruction sweep over the
/// verification acts. Throws DegenerateLambdaError, InvalidCapacityError
/// or ReconstructionMismatchError when the oracle is not a CPT functional.
ExtractionResult extract_cpt(const FunctionalOracle& oracle, const VerificationConfig& config = {});

/// The three comonotonic pair classes the additivity check separates. A
/// CPT functional must be additive on the first two; gaps in the third
/// are gain-loss hedging, which CPT permits.
enum class PairClass {
  same_sign_comonotone,
  opposite_sign_disjoint,
  general_comonotone,
};

/// Class of a comonotonic pair, or nullopt if the acts are not comonotonic.
std::optional<PairClass> classify_pair(const Act& f, const Act& g);

struct AdditivityViolation {
  Act f;
  Act g;
  double gap;  // I(f+g) - I(f) - I(g)
};

struct AdditivityClassStats {
  std::size_t pairs_tested = 0;
  std::vector<AdditivityViolation> violations;
};

struct AdditivityReport {
  AdditivityClassStats same_sign;
  AdditivityClassStats opposite_disjoint;
  AdditivityClassStats general;
  std::size_t pairs_skipped = 0;  // sampled pairs that were not comonotonic

  const AdditivityClassStats& stats(PairClass c) const;
  AdditivityClassStats& stats(PairClass c);
  /// No violations in the two classes a CPT functional must satisfy.
  bool restricted_clean() const {
    return same_sign.violations.empty() && opposite_disjoint.violations.empty();
  }
};

/// Tests I(f+g) = I(f) + I(g) over comonotonic pairs from the grid (n <= 3),
/// the config's extra pairs, and seeded random pairs drawn per class.
/// Violations are data, not errors; iteration order is deterministic.
AdditivityReport check_restricted_comonotonic_additivity(const FunctionalOracle& oracle,
                                                         const VerificationConfig& config = {});

struct MonotonicityViolation {
  Act f;
  Act g;      // f >= g pointwise
  double gap;  // I(f) - I(g), negative on violation
};

struct MonotonicityReport {
  std::size_t pairs_tested = 0;
  std::vector<MonotonicityViolation> violations;
  bool clean() const { return violations.empty(); }
};

/// Samples dominated pairs f >= g and flags I(f) < I(g) - tolerance.
MonotonicityReport check_monotonicity(const FunctionalOracle& oracle,
                                      const VerificationConfig& config = {});

struct SymmetryResult {
  bool symmetric = false;
  /// An act w with cpt(-w) != -cpt(w) when not symmetric: the unit act if
  /// lambda != 1, otherwise an indicator of a subset where the two
  /// capacities differ.
  std::optional<Act> witness;
  double gap = 0.0;  // cpt(-w) + cpt(w) at the witness
};

/// True iff lambda = 1 and the gain and loss capacities agree tablewise
/// (within tolerance), which is exactly when the functional is odd.
SymmetryResult check_symmetry(const CptParams& p, double tolerance = kDefaultTolerance);

struct UncertaintyAttitudes {
  bool convex_gains = false;
  bool convex_losses = false;
  bool conjugate_loss_concave = false;  // always agrees with convex_losses
};

UncertaintyAttitudes check_uncertainty_attitudes(const CptParams& p,
                                                 double tolerance = kDefaultTolerance);

}  // namespace cptkit

#endif
