// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Every tolerance is pinned in the criterion itself.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "cptkit/elicitation.hpp"
#include "cptkit/errors.hpp"
#include "cptkit/integration.hpp"
#include "cptkit/random.hpp"
#include "cptkit/representation.hpp"
#include "test_support.hpp"

using namespace cptkit;
using cptkit_test::generic_space;
using cptkit_test::hedging_capacity;
using cptkit_test::three_states;

namespace {

struct Criterion {
  int id;
  std::string label;
  double time_budget_seconds;  // 0 = no budget
  std::function<bool(std::string&)> run;
};

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

// --- 1: golden three-state suite -----------------------------------------

bool golden_suite(std::string& detail) {
  const double tol = 1e-12;
  const StateSpace s = three_states();
  const Capacity v = hedging_capacity(s);
  const Act f = cptkit_test::act_f(s);
  const Act g = cptkit_test::act_g(s);
  const Act h = cptkit_test::act_h(s);

  struct Expected {
    const char* name;
    double got;
    double want;
  };
  const Expected values[] = {
      {"S(f)", sipos(f, v), 11.0 / 3.0},      {"C(f)", choquet(f, v), 11.0 / 3.0},
      {"S(g)", sipos(g, v), 11.0 / 3.0},      {"C(g)", choquet(g, v), 11.0 / 3.0},
      {"C(h)", choquet(h, v), -4.0 / 3.0},    {"S(f+h)", sipos(f + h, v), 7.0 / 3.0},
      {"C(f+h)", choquet(f + h, v), 7.0 / 3.0}, {"C(g+h)", choquet(g + h, v), 7.0 / 3.0},
      {"S(g+h)", sipos(g + h, v), 4.0 / 3.0},
  };
  for (const auto& e : values) {
    if (!close(e.got, e.want, tol)) {
      detail = std::string(e.name) + " = " + std::to_string(e.got);
      return false;
    }
  }

  const CptParams sip = sipos_params(v);
  const CptParams cho = choquet_params(v);
  if (prefers(f, g, sip, tol) != Preference::indifferent ||
      prefers(f, g, cho, tol) != Preference::indifferent) {
    detail = "f and g must be indifferent under both functionals";
    return false;
  }
  if (prefers(f + h, g + h, sip, tol) != Preference::f_strict) {
    detail = "f+h must beat g+h under the Sipos functional";
    return false;
  }
  if (prefers(f + h, g + h, cho, tol) != Preference::indifferent) {
    detail = "f+h and g+h must be indifferent under the Choquet functional";
    return false;
  }
  return true;
}

// --- 2: Choquet properties ------------------------------------------------

bool choquet_properties(std::string& detail) {
  const double tol = 1e-9;
  for (const int n : {2, 3, 4}) {
    const StateSpace space = generic_space(n);
    Rng rng(1000 + static_cast<std::uint64_t>(n));
    for (int iter = 0; iter < 1000; ++iter) {
      const Capacity v = random_capacity(space, rng);

      auto [a, b] = random_comonotone_pair(space, rng, -8.0, 8.0);
      if (!close(choquet(a + b, v), choquet(a, v) + choquet(b, v), tol)) {
        detail = "comonotonic additivity gap at n=" + std::to_string(n);
        return false;
      }

      const Act f = random_act(space, rng, -8.0, 8.0);
      std::vector<double> lower(f.payoffs());
      for (double& x : lower) x -= rng.uniform(0.0, 4.0);
      if (choquet(f, v) < choquet(Act(space, lower), v) - tol) {
        detail = "monotonicity violated at n=" + std::to_string(n);
        return false;
      }

      for (SubsetMask m = 0; m < space.subset_count(); ++m) {
        if (!close(choquet(Act::indicator(space, m), v), v.value(m), tol)) {
          detail = "indicator identity failed at n=" + std::to_string(n);
          return false;
        }
      }

      const double scale = rng.uniform(0.05, 6.0);
      if (!close(choquet(scale * f, v), scale * choquet(f, v), tol)) {
        detail = "positive homogeneity failed at n=" + std::to_string(n);
        return false;
      }
      const double shift = rng.uniform(-5.0, 5.0);
      if (!close(choquet(f + Act::constant(space, shift), v), choquet(f, v) + shift, tol)) {
        detail = "constant translation failed at n=" + std::to_string(n);
        return false;
      }
    }
  }
  return true;
}

// --- 3: conjugation identities ---------------------------------------------

bool conjugation_identities(std::string& detail) {
  const double tol = 1e-9;
  int cases = 0;
  for (const int n : {2, 3, 4}) {
    const StateSpace space = generic_space(n);
    Rng rng(3000 + static_cast<std::uint64_t>(n));
    for (int iter = 0; iter < 400; ++iter) {
      ++cases;
      const Capacity v = random_capacity(space, rng);
      const Capacity dual = conjugate(v);
      const Act f = random_act(space, rng, -7.0, 7.0);
      const Act plus = positive_part(f);
      const Act minus = negative_part(f);

      if (!close(sipos(f, v), choquet(plus, v) + choquet(-minus, dual), tol)) {
        detail = "Sipos-conjugate identity failed";
        return false;
      }
      if (!close(choquet(f, v), choquet(plus, v) + choquet(-minus, v), tol) ||
          !close(choquet(f, v), choquet(plus, v) - choquet(minus, dual), tol)) {
        detail = "Choquet split identity failed";
        return false;
      }
      const Act pos = random_act(space, rng, 0.0, 7.0);
      if (!close(-choquet(pos, v), choquet(-pos, dual), tol)) {
        detail = "one-signed reflection identity failed";
        return false;
      }
    }
  }
  if (cases < 1000) {
    detail = "not enough cases";
    return false;
  }
  return true;
}

// --- 4: extraction round trip ----------------------------------------------

bool extraction_round_trip(std::string& detail) {
  const double tol = 1e-9;
  const StateSpace s = generic_space(3);
  Rng rng(4000);
  for (int iter = 0; iter < 200; ++iter) {
    const CptParams truth = random_cpt_params(s, rng, 0.25, 4.0);
    ExtractionResult result = [&] {
      try {
        return extract_cpt(make_cpt_oracle(truth));
      } catch (const Error& e) {
        throw Error("extraction refused a CPT oracle: " + std::string(e.what()));
      }
    }();
    if (!close(result.params.lambda(), truth.lambda(), tol)) {
      detail = "lambda off by " + std::to_string(result.params.lambda() - truth.lambda());
      return false;
    }
    for (SubsetMask m = 0; m < s.subset_count(); ++m) {
      if (!close(result.params.v_plus().value(m), truth.v_plus().value(m), tol) ||
          !close(result.params.v_minus().value(m), truth.v_minus().value(m), tol)) {
        detail = "capacity table mismatch at subset " + std::to_string(m);
        return false;
      }
    }
    if (result.acts_checked != 125) {
      detail = "expected the exhaustive 125-act grid, checked " +
               std::to_string(result.acts_checked);
      return false;
    }
    if (result.max_deviation > tol) {
      detail = "reconstruction deviation " + std::to_string(result.max_deviation);
      return false;
    }
  }
  return true;
}

// --- 5: additivity classifier ----------------------------------------------

bool additivity_classifier(std::string& detail) {
  const double tol = 1e-9;
  const StateSpace s = three_states();
  const Capacity v = hedging_capacity(s);
  VerificationConfig config;
  config.grid_min = -3;  // wide enough to contain the golden acts
  config.grid_max = 4;
  config.random_pairs = 300;

  const auto sipos_report = check_restricted_comonotonic_additivity(make_sipos_oracle(v), config);
  if (!sipos_report.same_sign.violations.empty() ||
      !sipos_report.opposite_disjoint.violations.empty()) {
    detail = "Sipos oracle violated a restricted class";
    return false;
  }
  bool found = false;
  const std::vector<double> gain{3, 4, 4};
  const std::vector<double> loss{-3, 0, -1};
  for (const auto& violation : sipos_report.general.violations) {
    const bool match = (violation.f.payoffs() == gain && violation.g.payoffs() == loss) ||
                       (violation.f.payoffs() == loss && violation.g.payoffs() == gain);
    if (match) {
      found = true;
      if (!close(violation.gap, 1.0, tol)) {
        detail = "overlap pair gap = " + std::to_string(violation.gap);
        return false;
      }
    }
  }
  if (!found) {
    detail = "overlapping gain/loss pair missing from the general-comonotone violations";
    return false;
  }

  const auto choquet_report =
      check_restricted_comonotonic_additivity(make_choquet_oracle(v), config);
  if (!choquet_report.same_sign.violations.empty() ||
      !choquet_report.opposite_disjoint.violations.empty() ||
      !choquet_report.general.violations.empty()) {
    detail = "Choquet oracle must be additive on every comonotone class";
    return false;
  }
  return true;
}

// --- 6: oddness and parametric symmetry agree -------------------------------

bool symmetry_equivalence(std::string& detail) {
  const double tol = 1e-9;
  const StateSpace s = generic_space(3);
  Rng rng(6000);
  const auto grid = integer_grid_acts(s, -2, 2);

  auto grid_is_odd = [&](const CptParams& p) {
    for (const Act& f : grid) {
      if (std::abs(cpt(-f, p) + cpt(f, p)) > tol) return false;
    }
    return true;
  };

  for (int iter = 0; iter < 100; ++iter) {
    CptParams p = [&] {
      const int flavor = iter % 3;
      if (flavor == 0) {
        return sipos_params(random_capacity(s, rng));  // must be symmetric
      }
      if (flavor == 1) {
        double lambda = rng.uniform(0.25, 4.0);  // push lambda away from 1
        if (std::abs(lambda - 1.0) < 0.1) lambda += 0.5;
        const Capacity v = random_capacity(s, rng);
        return CptParams(v, v, lambda);
      }
      while (true) {  // lambda = 1 but distinct capacities
        const Capacity a = random_capacity(s, rng);
        const Capacity b = random_capacity(s, rng);
        for (SubsetMask m = 0; m < s.subset_count(); ++m) {
          if (std::abs(a.value(m) - b.value(m)) > 1e-6) return CptParams(a, b, 1.0);
        }
      }
    }();

    const auto result = check_symmetry(p, tol);
    const bool odd = grid_is_odd(p);
    if (result.symmetric != odd) {
      detail = "parametric check and grid oddness disagree on case " + std::to_string(iter);
      return false;
    }
    if (iter % 3 == 0 && !result.symmetric) {
      detail = "Sipos parameters flagged asymmetric";
      return false;
    }
    if (iter % 3 != 0 && result.symmetric) {
      detail = "perturbed parameters flagged symmetric";
      return false;
    }
    if (!result.symmetric) {
      if (!result.witness) {
        detail = "missing witness";
        return false;
      }
      if (std::abs(cpt(-*result.witness, p) + cpt(*result.witness, p)) <= tol) {
        detail = "witness does not violate oddness";
        return false;
      }
    }
  }
  return true;
}

// --- 7: layer decomposition --------------------------------------------------

bool layer_properties(std::string& detail) {
  const double tol = 1e-9;
  Rng rng(7000);
  for (int iter = 0; iter < 500; ++iter) {
    const int n = 1 + iter % 6;
    const StateSpace space = generic_space(n);
    // Dyadic payoffs: the telescoping reassembly is then exact in binary
    // floating point, so the sum check is bitwise.
    std::vector<double> payoffs(n);
    for (double& x : payoffs) x = -rng.uniform_int(0, 8192) * 0x1.0p-10;
    const Act f(space, payoffs);

    const auto layers = layer_decomposition(f);
    std::vector<double> sum(n, 0.0);
    for (const Act& layer : layers) {
      if (!is_nonpositive(layer)) {
        detail = "layer with positive entry";
        return false;
      }
      for (int i = 0; i < n; ++i) sum[i] += layer[i];
    }
    if (sum != f.payoffs()) {
      detail = "layers do not reassemble the act exactly";
      return false;
    }
    for (std::size_t i = 0; i + 1 < layers.size(); ++i) {
      Act tail = Act::zero(space);
      for (std::size_t k = i + 1; k < layers.size(); ++k) tail = tail + layers[k];
      if (!is_comonotonic(layers[i], tail)) {
        detail = "layer not comonotonic with its tail sum";
        return false;
      }
    }
    const CptParams p = random_cpt_params(space, rng, 0.25, 4.0);
    double total = 0.0;
    for (const Act& layer : layers) total += cpt(layer, p);
    if (!close(total, cpt(f, p), tol)) {
      detail = "layerwise evaluation off by " + std::to_string(total - cpt(f, p));
      return false;
    }
  }
  return true;
}

// --- 8: elicitation round trip ------------------------------------------------

bool elicitation_round_trip(std::string& detail) {
  const double tol = 1e-9;
  const StateSpace s = generic_space(3);
  Rng rng(8000);
  int informative = 0;
  int guard = 0;
  while (informative < 500) {
    if (++guard > 20000) {
      detail = "generator failed to produce informative triples";
      return false;
    }
    const CptParams p = random_cpt_params(s, rng, 0.25, 4.0);
    const Act f(s, {rng.uniform(0.5, 6.0), 0.0, 0.0});
    const Act g(s, {0.0, -rng.uniform(0.5, 6.0), -rng.uniform(0.0, 6.0)});
    const auto t = simulate_elicitation_triple(f, g, p);
    if (std::abs(t.alpha) <= 1e-6 || std::abs(t.beta) <= 1e-6) continue;
    ++informative;
    const auto result = elicit_lambda(t, tol);
    if (result.kind == LossAversionKind::neutral) {
      if (std::abs(t.gamma - (t.alpha + t.beta)) > tol) {
        detail = "neutral verdict on a non-additive triple";
        return false;
      }
      continue;
    }
    if (result.kind != LossAversionKind::determined) {
      detail = "informative triple came back indeterminate";
      return false;
    }
    if (!close(*result.lambda, p.lambda(), tol)) {
      detail = "lambda off by " + std::to_string(*result.lambda - p.lambda());
      return false;
    }
  }

  // Branch boundary: at gamma = 0 both formulas give the same coefficient.
  for (int iter = 0; iter < 200; ++iter) {
    const double alpha = rng.uniform(0.1, 5.0);
    const double beta = -rng.uniform(0.1, 5.0);
    const double gain_branch = (0.0 - alpha) / beta;
    const double loss_branch = alpha / (0.0 - beta);
    if (!close(gain_branch, loss_branch, tol)) {
      detail = "branch formulas disagree at gamma = 0";
      return false;
    }
  }
  return true;
}

// --- 9: convexity checks ---------------------------------------------------

bool convexity_checks(std::string& detail) {
  const StateSpace s = three_states();
  const Capacity v = hedging_capacity(s);
  const auto result = is_convex(v);
  if (result.holds || !result.witness) {
    detail = "golden capacity must fail convexity with a witness";
    return false;
  }
  const auto w = *result.witness;
  if (v.value(w.a | w.b) + v.value(w.a & w.b) >= v.value(w.a) + v.value(w.b) - 1e-9) {
    detail = "returned witness does not violate the inequality";
    return false;
  }

  const StateSpace four = generic_space(4);
  std::vector<double> table(16, 0.0);
  for (SubsetMask m = 0; m < 16; ++m) {
    const double share = static_cast<double>(subset_size(m)) / 4.0;
    table[m] = share * share;
  }
  table[15] = 1.0;
  if (!is_convex(Capacity::validate(four, std::move(table))).holds) {
    detail = "squared-uniform distortion must be convex";
    return false;
  }

  Rng rng(9000);
  for (int iter = 0; iter < 100; ++iter) {
    const CptParams p = random_cpt_params(generic_space(3), rng, 0.5, 2.0);
    const auto attitudes = check_uncertainty_attitudes(p);
    if (attitudes.conjugate_loss_concave != attitudes.convex_losses) {
      detail = "conjugate concavity flag disagrees with loss convexity";
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "golden three-state suite (values and preferences, tol 1e-12)", 1.0, golden_suite},
      {2, "Choquet properties on 1000 seeded cases per n in {2,3,4}", 30.0, choquet_properties},
      {3, "conjugation identities on 1200 random (act, capacity) pairs", 0.0,
       conjugation_identities},
      {4, "CPT extraction round trip, 200 random parameter sets", 60.0, extraction_round_trip},
      {5, "restricted-additivity classifier on the golden oracles", 0.0, additivity_classifier},
      {6, "parametric symmetry agrees with grid oddness, 100 cases", 0.0, symmetry_equivalence},
      {7, "layer decomposition on 500 random loss acts", 0.0, layer_properties},
      {8, "loss-aversion elicitation round trip, 500 informative triples", 0.0,
       elicitation_round_trip},
      {9, "convexity checks and attitude flags", 0.0, convexity_checks},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    std::string detail;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
      ok = criterion.run(detail);
    } catch (const std::exception& e) {
      detail = e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && criterion.time_budget_seconds > 0.0 && seconds > criterion.time_budget_seconds) {
      ok = false;
      detail = "exceeded time budget of " + std::to_string(criterion.time_budget_seconds) + " s";
    }
    std::printf("[%s] criterion %d: %s (%.3f s)%s%s\n", ok ? "PASS" : "FAIL", criterion.id,
                criterion.label.c_str(), seconds, detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
