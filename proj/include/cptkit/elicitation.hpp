#ifndef CPTKIT_ELICITATION_HPP
#define CPTKIT_ELICITATION_HPP

#include <optional>

#include "cptkit/act.hpp"
#include "cptkit/common.hpp"
#include "cptkit/integration.hpp"

namespace cptkit {

/// Certainty equivalents reported for a nonnegative act (alpha), a
/// nonpositive act with disjoint support (beta), and their sum (gamma).
struct ElicitationTriple {
  ElicitationTriple(double alpha, double beta, double gamma);
  double alpha;  // >= 0
  double beta;   // <= 0
  double gamma;
};

enum class LossAversionKind {
  neutral,        // gamma = alpha + beta: no loss-aversion or loss-seeking
  determined,     // lambda identified by the triple
  indeterminate,  // degenerate triple, cannot identify lambda
};

struct LossAversionResult {
  LossAversionKind kind;
  std::optional<double> lambda;  // 1 when neutral, > 0 when determined
};

/// Recovers the loss-aversion coefficient from a certainty-equivalent
/// triple:
///   gamma >= 0:  lambda = (gamma - alpha) / beta
///   gamma <  0:  lambda = alpha / (gamma - beta)
/// preceded by a neutrality test (gamma = alpha + beta within tolerance
/// gives lambda = 1). Triples with both |alpha| and |beta| below the
/// tolerance, or with a vanishing branch denominator, are indeterminate.
/// A computed lambda <= 0 throws InconsistentTripleError: such data is
/// incompatible with any CPT agent.
LossAversionResult elicit_lambda(const ElicitationTriple& t, double tolerance = kDefaultTolerance);

/// Runs the certainty-equivalent experiment in simulation: f must be
/// nonnegative, g nonpositive, supports disjoint. Returns the triple of
/// certainty equivalents of f, g and f+g under the given parameters.
ElicitationTriple simulate_elicitation_triple(const Act& f, const Act& g, const CptParams& p);

enum class Preference {
  f_strict,
  g_strict,
  indifferent,
};

/// Compares CPT values with tolerance slack for indifference.
Preference prefers(const Act& f, const Act& g, const CptParams& p,
                   double tolerance = kDefaultTolerance);

}  // namespace cptkit

#endif
