#include "cptkit/integration.hpp"

#include <cmath>

#include "cptkit/errors.hpp"

namespace cptkit {

CptParams::CptParams(Capacity v_plus, Capacity v_minus, double lambda)
    : CptParams(std::move(v_plus), std::move(v_minus), lambda, std::nullopt) {}

CptParams::CptParams(Capacity v_plus, Capacity v_minus, double lambda,
                     std::optional<Rational> exact_lambda)
    : v_plus_(std::move(v_plus)),
      v_minus_(std::move(v_minus)),
      lambda_(lambda),
      exact_lambda_(std::move(exact_lambda)) {
  if (v_plus_.space() != v_minus_.space()) {
    throw SpaceMismatchError("gain and loss capacities live on different state spaces");
  }
  if (!(lambda_ > 0.0) || !std::isfinite(lambda_)) {
    throw InvalidParamsError("loss-aversion coefficient must be finite and > 0, got " +
                             std::to_string(lambda_));
  }
}

CptParams sipos_params(const Capacity& v) {
  return CptParams(v, v, 1.0, Rational::from_integer(1));
}

CptParams choquet_params(const Capacity& v) {
  return CptParams(v, conjugate(v), 1.0, Rational::from_integer(1));
}

namespace {

void require_same_space(const Act& f, const Capacity& v) {
  if (f.space() != v.space()) {
    throw SpaceMismatchError("act and capacity live on different state spaces");
  }
}

double choquet_table(const std::vector<double>& payoffs, const Capacity& v) {
  return detail::choquet_layer_sum(payoffs, [&](SubsetMask m) { return v.value(m); });
}

}  // namespace

double choquet(const Act& f, const Capacity& v) {
  require_same_space(f, v);
  return choquet_table(f.payoffs(), v);
}

double sipos(const Act& f, const Capacity& v) {
  require_same_space(f, v);
  return choquet_table(positive_part(f).payoffs(), v) -
         choquet_table(negative_part(f).payoffs(), v);
}

double cpt(const Act& f, const CptParams& p) {
  if (f.space() != p.space()) {
    throw SpaceMismatchError("act and CPT parameters live on different state spaces");
  }
  return choquet_table(positive_part(f).payoffs(), p.v_plus()) -
         p.lambda() * choquet_table(negative_part(f).payoffs(), p.v_minus());
}

double certainty_equivalent(const Act& f, const CptParams& p) {
  const double value = cpt(f, p);
  return value >= 0.0 ? value : value / p.lambda();
}

double hedging_gap(const Act& f, const Act& g, const CptParams& p) {
  return cpt(f + g, p) - cpt(f, p) - cpt(g, p);
}

std::optional<Rational> cpt_exact(const std::vector<Rational>& payoffs, const CptParams& p) {
  if (!p.v_plus().exact_table() || !p.v_minus().exact_table() || !p.exact_lambda()) {
    return std::nullopt;
  }
  if (payoffs.size() != static_cast<std::size_t>(p.space().size())) {
    throw SpaceMismatchError("exact payoff vector length does not match the parameter space");
  }
  const Rational zero;
  std::vector<Rational> plus(payoffs.size()), minus(payoffs.size());
  for (std::size_t i = 0; i < payoffs.size(); ++i) {
    plus[i] = payoffs[i] < zero ? zero : payoffs[i];
    minus[i] = payoffs[i] < zero ? -payoffs[i] : zero;
  }
  try {
    const Rational gains = detail::choquet_layer_sum(
        plus, [&](SubsetMask m) { return (*p.v_plus().exact_table())[m]; });
    const Rational losses = detail::choquet_layer_sum(
        minus, [&](SubsetMask m) { return (*p.v_minus().exact_table())[m]; });
    return gains - *p.exact_lambda() * losses;
  } catch (const RationalOverflowError&) {
    return std::nullopt;
  }
}

std::optional<Rational> certainty_equivalent_exact(const std::vector<Rational>& payoffs,
                                                   const CptParams& p) {
  const auto value = cpt_exact(payoffs, p);
  if (!value) return std::nullopt;
  if (!(*value < Rational())) return value;
  try {
    return *value / *p.exact_lambda();
  } catch (const RationalOverflowError&) {
    return std::nullopt;
  }
}

}  // namespace cptkit
