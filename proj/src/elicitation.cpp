#include "cptkit/elicitation.hpp"

#include <cmath>
#include <string>

#include "cptkit/errors.hpp"

namespace cptkit {

ElicitationTriple::ElicitationTriple(double alpha, double beta, double gamma)
    : alpha(alpha), beta(beta), gamma(gamma) {
  if (!std::isfinite(alpha) || !std::isfinite(beta) || !std::isfinite(gamma)) {
    throw WrongSignError("certainty equivalents must be finite");
  }
  if (alpha < 0.0) {
    throw WrongSignError("alpha is the certainty equivalent of a nonnegative act, got " +
                         std::to_string(alpha));
  }
  if (beta > 0.0) {
    throw WrongSignError("beta is the certainty equivalent of a nonpositive act, got " +
                         std::to_string(beta));
  }
}

LossAversionResult elicit_lambda(const ElicitationTriple& t, double tolerance) {
  // A triple with both certainty equivalents at zero carries no signal:
  // every lambda reproduces it.
  if (std::abs(t.alpha) <= tolerance && std::abs(t.beta) <= tolerance) {
    return LossAversionResult{LossAversionKind::indeterminate, std::nullopt};
  }
  if (std::abs(t.gamma - (t.alpha + t.beta)) <= tolerance) {
    return LossAversionResult{LossAversionKind::neutral, 1.0};
  }
  double lambda;
  if (t.gamma >= 0.0) {
    if (std::abs(t.beta) <= tolerance) {
      return LossAversionResult{LossAversionKind::indeterminate, std::nullopt};
    }
    lambda = (t.gamma - t.alpha) / t.beta;
  } else {
    if (std::abs(t.gamma - t.beta) <= tolerance) {
      return LossAversionResult{LossAversionKind::indeterminate, std::nullopt};
    }
    lambda = t.alpha / (t.gamma - t.beta);
  }
  if (!(lambda > 0.0)) {
    throw InconsistentTripleError(
        "triple implies loss-aversion coefficient " + std::to_string(lambda) +
            "; no CPT agent produces these certainty equivalents",
        lambda);
  }
  return LossAversionResult{LossAversionKind::determined, lambda};
}

ElicitationTriple simulate_elicitation_triple(const Act& f, const Act& g, const CptParams& p) {
  require_same_space(f, g);
  if (!is_nonnegative(f)) throw WrongSignError("f must be a nonnegative act");
  if (!is_nonpositive(g)) throw WrongSignError("g must be a nonpositive act");
  if (!have_disjoint_supports(f, g)) {
    throw OverlappingSupportsError("f and g must have disjoint supports");
  }
  return ElicitationTriple(certainty_equivalent(f, p), certainty_equivalent(g, p),
                           certainty_equivalent(f + g, p));
}

Preference prefers(const Act& f, const Act& g, const CptParams& p, double tolerance) {
  const double diff = cpt(f, p) - cpt(g, p);
  if (std::abs(diff) <= tolerance) return Preference::indifferent;
  return diff > 0.0 ? Preference::f_strict : Preference::g_strict;
}

}  // namespace cptkit
