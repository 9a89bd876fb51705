#pragma once

// Ground truth that shares nothing with the engine beyond the Instance type:
// brute-force outcome enumeration for M, brute-force enumeration of every
// history-dependent stopping rule for V, and seeded Monte Carlo.

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "prophet_gap/stopping_engine.hpp"

namespace prophet_gap {

inline constexpr std::uint64_t kEnumerationLimit = 1'000'000;

/// Sum over all n-tuples of atoms of prod(weights) * max_i (atom_i - i*c).
template <Scalar S>
S enumerate_prophet(const Instance<S> &inst) {
  const std::size_t m = inst.dist.size();
  const int n = inst.horizon;
  std::uint64_t outcomes = 1;
  for (int i = 0; i < n; ++i) {
    outcomes *= m;
    if (outcomes > kEnumerationLimit)
      throw Error("state-space-too-large", std::to_string(m) + "^" + std::to_string(n) + " outcomes");
  }
  const auto atoms = inst.dist.atoms();
  const auto weights = inst.dist.weights();
  std::vector<std::size_t> digits(static_cast<std::size_t>(n), 0);
  S total(0);
  for (std::uint64_t o = 0; o < outcomes; ++o) {
    std::uint64_t rest = o;
    for (auto &digit : digits) {
      digit = static_cast<std::size_t>(rest % m);
      rest /= m;
    }
    S probability(1);
    S best = atoms[digits[0]] - inst.cost;
    for (int i = 0; i < n; ++i) {
      const std::size_t j = digits[static_cast<std::size_t>(i)];
      probability *= weights[j];
      S y = atoms[j] - S(i + 1) * inst.cost;
      if (best < y) best = std::move(y);
    }
    total += probability * best;
  }
  return total;
}

/// Number of distinct deterministic stopping times for m atoms and horizon
/// n. Rules that differ only on histories they never reach are the same
/// stopping time: a node at stage k either stops or hands each of its m
/// children an independent subrule, so T(n) = 1, T(k) = 1 + T(k+1)^m and the
/// total is T(1)^m. nullopt once the count exceeds kEnumerationLimit.
inline std::optional<std::uint64_t> stopping_rule_count(std::size_t m, int n) {
  const auto power = [&](std::uint64_t base) -> std::optional<std::uint64_t> {
    std::uint64_t out = 1;
    for (std::size_t j = 0; j < m; ++j) {
      if (out > kEnumerationLimit / base) return std::nullopt;
      out *= base;
    }
    return out;
  };
  std::uint64_t below = 1;
  for (int k = n - 1; k >= 1; --k) {
    const auto continued = power(below);
    if (!continued) return std::nullopt;
    below = 1 + *continued;
  }
  return power(below);
}

namespace detail {

// Expected payoff, restricted to the subtree, of every stopping time that
// reaches the node (stage, atom j) with path probability p.
template <Scalar S>
std::vector<S> subtree_rule_values(const Instance<S> &inst, int stage, std::size_t j, const S &p) {
  const auto &d = inst.dist;
  std::vector<S> out{S(p * (d.atoms()[j] - S(stage) * inst.cost))};
  if (stage == inst.horizon) return out;
  std::vector<S> combos{S(0)};
  for (std::size_t child = 0; child < d.size(); ++child) {
    const auto sub = subtree_rule_values(inst, stage + 1, child, S(p * d.weights()[child]));
    std::vector<S> next;
    next.reserve(combos.size() * sub.size());
    for (const S &a : combos)
      for (const S &b : sub) next.emplace_back(a + b);
    combos = std::move(next);
  }
  out.insert(out.end(), std::make_move_iterator(combos.begin()), std::make_move_iterator(combos.end()));
  return out;
}

}  // namespace detail

/// max over every deterministic history-dependent stopping time of E(Y_tau).
///
/// Each stopping time is scored separately by summing its stopping payoffs
/// over the outcome tree; no backward induction. Requires
/// stopping_rule_count(m, n) <= kEnumerationLimit.
template <Scalar S>
S enumerate_stopping(const Instance<S> &inst) {
  const std::size_t m = inst.dist.size();
  const int n = inst.horizon;
  if (!stopping_rule_count(m, n))
    throw Error("state-space-too-large", "stopping times for m = " + std::to_string(m) +
                                             ", n = " + std::to_string(n));
  std::vector<S> totals{S(0)};
  for (std::size_t j = 0; j < m; ++j) {
    const auto sub = detail::subtree_rule_values(inst, 1, j, inst.dist.weights()[j]);
    std::vector<S> next;
    next.reserve(totals.size() * sub.size());
    for (const S &a : totals)
      for (const S &b : sub) next.emplace_back(a + b);
    totals = std::move(next);
  }
  return *std::max_element(totals.begin(), totals.end());
}

/// Monte Carlo result; std_error is the sample standard deviation over
/// sqrt(samples).
struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::string algorithm;
};

/// Identifies the generator: shard s of a run with seed k draws from
/// mt19937_64 seeded with splitmix64(k + s * golden), uniforms are the top 53
/// bits, and atoms are picked by inverse CDF.
inline constexpr const char *kMcAlgorithm = "mt19937_64/splitmix64-shards-16/inverse-cdf";

/// Simulates max_i (X_i - i*c).
McEstimate mc_prophet(const Instance<double> &inst, std::uint64_t samples, std::uint64_t seed);

/// Simulates the threshold rule "stop at the first i with X_i >= t_i";
/// stage n always stops. Thresholds may be +-infinity.
McEstimate mc_rule_value(const Instance<double> &inst, const std::vector<double> &thresholds,
                         std::uint64_t samples, std::uint64_t seed);

/// Thresholds of optimal_rule_thresholds as doubles, -infinity for "always stop".
template <Scalar S>
std::vector<double> thresholds_to_real(const std::vector<std::optional<S>> &thresholds) {
  std::vector<double> out;
  out.reserve(thresholds.size());
  for (const auto &t : thresholds)
    out.push_back(t ? to_double(*t) : -std::numeric_limits<double>::infinity());
  return out;
}

inline Instance<double> to_real(const Instance<Rational> &inst) {
  return Instance<double>(to_real(inst.dist), inst.cost.get_d(), inst.horizon);
}
inline const Instance<double> &to_real(const Instance<double> &inst) { return inst; }

}  // namespace prophet_gap
