#pragma once

#include <utility>
#include <vector>

#include "prophet_gap/stopping_engine.hpp"

namespace prophet_gap {

/// Record of one reduction step: both instances, the value profile before
/// and after (pairs (v_i, v~_i), i = 1..n) and both gaps.
template <Scalar S>
struct ReductionTrace {
  Instance<S> input;
  Instance<S> output;
  std::vector<std::pair<S, S>> v_invariance;
  S gap_before;
  S gap_after;

  /// gap_after >= gap_before (within kEpsNum in real mode).
  bool gap_nondecreasing() const { return approx_le(gap_before, gap_after); }

  /// Every v~_i equals v_i.
  bool values_preserved() const {
    for (const auto &[before, after] : v_invariance)
      if (!approx_eq(before, after)) return false;
    return true;
  }
};

namespace detail {

template <Scalar S>
ReductionTrace<S> make_trace(const Instance<S> &input, Instance<S> output) {
  const ValueProfile<S> before = solve(input);
  const ValueProfile<S> after = solve(output);
  std::vector<std::pair<S, S>> pairs;
  pairs.reserve(before.values.size());
  for (std::size_t i = 0; i < before.values.size(); ++i)
    pairs.emplace_back(before.values[i], after.values[i]);
  return {input, std::move(output), std::move(pairs), before.gap, after.gap};
}

}  // namespace detail

/// Normalizes the support to x_* = 0, x^* = 1.
///
/// Atoms map by (x - x_*)/(x^* - x_*) and the cost by c/(x^* - x_*), which
/// divides the gap by x^* - x_* <= 1. A degenerate law (x_* = x^*, gap 0) is
/// replaced by Bernoulli(1/2) at the same cost.
template <Scalar S>
ReductionTrace<S> rescale(const Instance<S> &inst) {
  if (!(inst.cost > S(0))) throw Error("zero-cost", "rescale needs c > 0");
  const S &lo = inst.dist.min_atom();
  const S &hi = inst.dist.max_atom();
  if (!approx_lt(lo, hi))
    return detail::make_trace(inst, Instance<S>(bernoulli(S(S(1) / S(2))), inst.cost, inst.horizon));
  return detail::make_trace(
      inst, Instance<S>(affine_rescale(inst.dist, lo, hi), S(inst.cost / (hi - lo)), inst.horizon));
}

/// Pushes the law onto {0, v_1, ..., v_{n-1}, 1} by the balayage chain
/// [0, v_1], [v_1, v_2], ..., [v_{n-1}, 1], applied in that order. The value
/// profile is unchanged and the prophet value can only grow.
///
/// When E X <= c the chain degenerates to the single 0-1 balayage at the
/// same cost (Bernoulli reduction).
template <Scalar S>
ReductionTrace<S> balayage_chain(const Instance<S> &inst) {
  const auto &d = inst.dist;
  if (!approx_eq(d.min_atom(), S(0)) || !approx_eq(d.max_atom(), S(1)))
    throw Error("support-not-normalized",
                "support spans [" + to_string(d.min_atom()) + ", " + to_string(d.max_atom()) + "]");
  if (!(inst.cost > S(0))) throw Error("zero-cost", "balayage_chain needs c > 0");

  if (approx_le(mean(d), inst.cost))
    return detail::make_trace(inst, Instance<S>(balayage(d, S(0), S(1)), inst.cost, inst.horizon));

  std::vector<S> knots{S(0)};
  for (S &v : compute_value(d, inst.cost, inst.horizon - 1))
    if (approx_lt(knots.back(), v)) knots.push_back(std::move(v));
  if (approx_lt(knots.back(), S(1)))
    knots.push_back(S(1));
  else
    knots.back() = S(1);

  FiniteDistribution<S> reduced = d;
  for (std::size_t k = 0; k + 1 < knots.size(); ++k)
    reduced = balayage(reduced, knots[k], knots[k + 1]);
  return detail::make_trace(inst, Instance<S>(std::move(reduced), inst.cost, inst.horizon));
}

}  // namespace prophet_gap
