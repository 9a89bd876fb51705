#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "prophet_gap/distribution.hpp"

namespace prophet_gap {

/// The problem (X_1, ..., X_n, c): i.i.d. draws from `dist`, each observation
/// charged `cost`, stopping at stage i pays Y_i = X_i - i*c.
template <Scalar S>
struct Instance {
  FiniteDistribution<S> dist;
  S cost;
  int horizon;

  Instance(FiniteDistribution<S> d, S c, int n)
      : dist(std::move(d)), cost(std::move(c)), horizon(n) {
    if (cost < S(0)) throw Error("negative-cost", "cost = " + to_string(cost));
    if (horizon < 1) throw Error("horizon-too-small", "n = " + std::to_string(horizon));
  }
};

/// A solved instance: v_1..v_n, the prophet value M and the gap D = M - v_n.
template <Scalar S>
struct ValueProfile {
  std::vector<S> values;
  S prophet;
  S gap;

  int horizon() const { return static_cast<int>(values.size()); }
  /// V(Y_1, ..., Y_n).
  const S &value() const { return values.back(); }
};

/// v_1 = E X - c, v_i = E max{X, v_{i-1}} - c. Negative values are legal.
template <Scalar S>
std::vector<S> compute_value(const FiniteDistribution<S> &dist, const S &cost, int horizon) {
  std::vector<S> values;
  values.reserve(static_cast<std::size_t>(std::max(horizon, 0)));
  if (horizon < 1) return values;
  values.push_back(mean(dist) - cost);
  for (int i = 1; i < horizon; ++i) values.push_back(dist.expect_max(values.back()) - cost);
  return values;
}

template <Scalar S>
std::vector<S> compute_value(const Instance<S> &inst) {
  return compute_value(inst.dist, inst.cost, inst.horizon);
}

/// E(max_i (X_i - i*c)).
///
/// The maximum lives on T = {atom - i*c}; P(max <= t) = prod_i F(t + i*c),
/// so one sorted sweep over the distinct points of T gives the law of the
/// maximum without enumerating outcomes.
template <Scalar S>
S compute_prophet(const Instance<S> &inst) {
  const auto &d = inst.dist;
  const int n = inst.horizon;
  std::vector<S> support;
  support.reserve(d.size() * static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    for (const S &a : d.atoms()) support.push_back(a - S(i) * inst.cost);
  std::sort(support.begin(), support.end());
  std::vector<S> distinct;
  for (S &t : support)
    if (distinct.empty() || !approx_eq(distinct.back(), t)) distinct.push_back(std::move(t));

  S total(0);
  S previous_cdf(0);
  for (const S &t : distinct) {
    S joint(1);
    for (int i = 1; i <= n; ++i) joint *= d.cdf(t + S(i) * inst.cost);
    total += t * (joint - previous_cdf);
    previous_cdf = joint;
  }
  return total;
}

template <Scalar S>
ValueProfile<S> solve(const Instance<S> &inst) {
  ValueProfile<S> profile{compute_value(inst), compute_prophet(inst), S(0)};
  profile.gap = profile.prophet - profile.value();
  return profile;
}

/// Stop at stage i iff X_i >= t_i, with t_i = v_{n-i}; the final threshold
/// is -infinity (std::nullopt): stage n always stops.
template <Scalar S>
std::vector<std::optional<S>> optimal_rule_thresholds(const ValueProfile<S> &profile) {
  const int n = profile.horizon();
  std::vector<std::optional<S>> thresholds;
  thresholds.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i < n; ++i) thresholds.emplace_back(profile.values[static_cast<std::size_t>(n - i - 1)]);
  thresholds.emplace_back(std::nullopt);
  return thresholds;
}

}  // namespace prophet_gap
