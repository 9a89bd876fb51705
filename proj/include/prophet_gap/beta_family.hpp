#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "prophet_gap/parallel.hpp"
#include "prophet_gap/stopping_engine.hpp"

namespace prophet_gap {

/// One-parameter deformation of an instance supported on
/// {0, v_1, ..., v_{n-1}, 1}: interior atoms scale to beta * v_i, atoms 0 and
/// 1 stay put, and the cost becomes c(beta) = beta * c' + P(X = 1) with
/// c' = c - P(X = 1) < 0. beta = 1 is the base instance, beta = 0 a two-point
/// law, beta = beta* = -P(X = 1)/c' the zero-cost instance.
template <Scalar S>
struct BetaFamily {
  Instance<S> base;
  std::vector<S> base_values;  // v_1..v_n of the base, computed once
  S p_one;
  S c_prime;
  S beta_star;

  S cost_at(const S &beta) const {
    S c = beta * c_prime + p_one;
    if constexpr (!is_exact_v<S>)
      if (c < 0.0 && c > -kEpsNum) c = 0.0;
    return c;
  }
};

/// Checks that `base` is admissible (support in {0, v_1, ..., v_{n-1}, 1},
/// mass at 0 and 1) and derives c' and beta*.
template <Scalar S>
BetaFamily<S> build_beta_family(const Instance<S> &base) {
  if (!(base.cost > S(0))) throw Error("zero-cost", "the family needs c > 0");
  if (!approx_lt(base.cost, mean(base.dist)))
    throw Error("mean-not-exceeding-cost",
                "E X = " + to_string(mean(base.dist)) + ", c = " + to_string(base.cost));
  std::vector<S> values = compute_value(base);

  std::vector<S> allowed{S(0), S(1)};
  allowed.insert(allowed.end(), values.begin(), values.end() - 1);
  for (const S &atom : base.dist.atoms()) {
    const bool listed = std::any_of(allowed.begin(), allowed.end(),
                                    [&](const S &v) { return approx_eq(v, atom); });
    if (!listed)
      throw Error("inadmissible-base", "atom " + to_string(atom) + " is not 0, 1 or some v_i");
  }
  const S p_zero = base.dist.mass_at(S(0));
  S p_one = base.dist.mass_at(S(1));
  if (!(p_zero > S(0)) || !(p_one > S(0)))
    throw Error("inadmissible-base", "P(X = 0) and P(X = 1) must both be positive");

  S c_prime = base.cost - p_one;
  if (!approx_lt(c_prime, S(0)))
    throw Error("c-prime-nonnegative", "c' = " + to_string(c_prime));
  S beta_star = -p_one / c_prime;
  return {base, std::move(values), std::move(p_one), std::move(c_prime), std::move(beta_star)};
}

/// X(beta) and c(beta). Atoms that collide (all interior atoms at beta = 0)
/// merge.
template <Scalar S>
Instance<S> instance_at(const BetaFamily<S> &fam, const S &beta) {
  if (approx_lt(beta, S(0)) || approx_lt(fam.beta_star, beta))
    throw Error("beta-out-of-range",
                "beta = " + to_string(beta) + " not in [0, " + to_string(fam.beta_star) + "]");
  const auto &d = fam.base.dist;
  std::vector<std::pair<S, S>> masses;
  masses.reserve(d.size());
  for (std::size_t j = 0; j < d.size(); ++j) {
    const S &atom = d.atoms()[j];
    masses.emplace_back(approx_eq(atom, S(1)) ? S(1) : S(beta * atom), d.weights()[j]);
  }
  return Instance<S>(FiniteDistribution<S>::from_masses(std::move(masses)), fam.cost_at(beta),
                     fam.base.horizon);
}

template <Scalar S>
struct BetaRow {
  S beta;
  S cost;
  S value;    // V(beta)
  S prophet;  // M(beta)
  S gap;      // D(beta)
};

/// Verdicts of the convexity argument on a grid, plus the sweep table.
template <Scalar S>
struct BetaCertificate {
  bool value_linear = true;         // V(beta) = beta * v_n
  bool profile_scaled = true;       // v_h(beta) = beta * v_h, h < n
  bool ordering = true;             // 0 <= beta v_1 <= ... <= beta v_{n-1} <= 1
  bool prophet_convex = true;       // divided differences of M nondecreasing
  bool gap_convex = true;           // same for D
  bool endpoint_bound = true;       // D(1) <= max{D(0), D(beta*)}
  bool endpoints_classified = true; // two-point law at 0, zero cost at beta*
  bool pathwise_convex = true;      // beta -> max_h Y_h(beta; omega) on sampled paths
  std::string failed_check;
  std::optional<S> offending_beta;
  S gap_at_zero;
  S gap_at_one;
  S gap_at_star;
  double tolerance = 0.0;
  std::vector<BetaRow<S>> table;

  bool passed() const { return failed_check.empty(); }
};

/// Grid of `points` uniform nodes on [0, beta*] with beta = 1 inserted.
template <Scalar S>
std::vector<S> beta_grid(const BetaFamily<S> &fam, int points) {
  std::vector<S> grid;
  for (int k = 0; k < points; ++k) {
    S node = fam.beta_star * S(k) / S(points - 1);
    if (approx_eq(node, S(1))) node = S(1);
    grid.push_back(std::move(node));
  }
  grid.front() = S(0);
  grid.back() = fam.beta_star;
  if (std::none_of(grid.begin(), grid.end(), [](const S &b) { return b == S(1); }))
    grid.push_back(S(1));
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end(),
                         [](const S &l, const S &r) { return approx_eq(l, r); }),
             grid.end());
  return grid;
}

namespace detail {

// Index of the first point where the slope sequence of (x, y) decreases by
// more than tol, or nullopt when the sampled function is convex.
template <Scalar S>
std::optional<std::size_t> convexity_violation(const std::vector<S> &x, const std::vector<S> &y,
                                               double tol) {
  for (std::size_t k = 1; k + 1 < x.size(); ++k) {
    const S left = (y[k] - y[k - 1]) / (x[k] - x[k - 1]);
    const S right = (y[k + 1] - y[k]) / (x[k + 1] - x[k]);
    if constexpr (is_exact_v<S>) {
      if (right < left) return k;
    } else if (right < left - tol) {
      return k;
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Solves every grid instance of the family and checks linearity of V,
/// grid convexity of M and D, the endpoint bound and the pathwise convexity
/// of beta -> max_h Y_h(beta). Checks are exact in rational mode and use a
/// 1e-10 tolerance in real mode.
template <Scalar S>
BetaCertificate<S> certify(const BetaFamily<S> &fam, int grid_points = 41, int path_samples = 256,
                           std::uint64_t path_seed = 0) {
  if (grid_points < 3) throw Error("grid-too-small", "need at least 3 grid points");
  const double tol = is_exact_v<S> ? 0.0 : 1e-10;
  const auto close = [tol](const S &a, const S &b) {
    if constexpr (is_exact_v<S>)
      return a == b;
    else
      return std::abs(a - b) <= tol;
  };

  const std::vector<S> grid = beta_grid(fam, grid_points);
  std::vector<ValueProfile<S>> profiles(grid.size(), ValueProfile<S>{{}, S(0), S(0)});
  std::vector<Instance<S>> instances(grid.size(), fam.base);
  parallel_for(grid.size(), [&](std::size_t k) {
    instances[k] = instance_at(fam, grid[k]);
    profiles[k] = solve(instances[k]);
  });

  BetaCertificate<S> cert;
  cert.tolerance = tol;
  const auto fail = [&cert](bool &flag, const char *name, std::optional<S> beta) {
    flag = false;
    if (cert.failed_check.empty()) {
      cert.failed_check = name;
      cert.offending_beta = std::move(beta);
    }
  };

  const int n = fam.base.horizon;
  std::vector<S> prophets;
  std::vector<S> gaps;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const S &beta = grid[k];
    const ValueProfile<S> &p = profiles[k];
    cert.table.push_back({beta, instances[k].cost, p.value(), p.prophet, p.gap});
    prophets.push_back(p.prophet);
    gaps.push_back(p.gap);

    if (!close(p.value(), S(beta * fam.base_values.back())))
      fail(cert.value_linear, "value-linear", beta);
    for (int h = 0; h + 1 < n; ++h) {
      if (!close(p.values[h], S(beta * fam.base_values[h]))) {
        fail(cert.profile_scaled, "profile-scaled", beta);
        break;
      }
    }
    S previous(0);
    for (int h = 0; h + 1 < n; ++h) {
      const S scaled = beta * fam.base_values[h];
      if (approx_lt(scaled, previous)) fail(cert.ordering, "ordering", beta);
      previous = scaled;
    }
    if (approx_lt(S(1), previous)) fail(cert.ordering, "ordering", beta);
  }

  if (auto k = detail::convexity_violation(grid, prophets, tol))
    fail(cert.prophet_convex, "prophet-convex", grid[*k]);
  if (auto k = detail::convexity_violation(grid, gaps, tol))
    fail(cert.gap_convex, "gap-convex", grid[*k]);

  const auto at = [&](const S &beta) {
    for (std::size_t k = 0; k < grid.size(); ++k)
      if (grid[k] == beta) return gaps[k];
    throw Error("grid-missing-node", to_string(beta));
  };
  cert.gap_at_zero = at(S(0));
  cert.gap_at_one = at(S(1));
  cert.gap_at_star = at(fam.beta_star);
  const S endpoint_max = std::max(cert.gap_at_zero, cert.gap_at_star);
  if constexpr (is_exact_v<S>) {
    if (endpoint_max < cert.gap_at_one) fail(cert.endpoint_bound, "endpoint-bound", S(1));
  } else if (endpoint_max + tol < cert.gap_at_one) {
    fail(cert.endpoint_bound, "endpoint-bound", S(1));
  }

  const auto &zero_dist = instances.front().dist;
  for (const S &atom : zero_dist.atoms())
    if (!approx_eq(atom, S(0)) && !approx_eq(atom, S(1)))
      fail(cert.endpoints_classified, "endpoints-classified", S(0));
  if (!approx_eq(instances.back().cost, S(0)))
    fail(cert.endpoints_classified, "endpoints-classified", fam.beta_star);

  // Pathwise: an outcome omega fixes which base atom each X_h takes.
  const auto &atoms = fam.base.dist.atoms();
  std::mt19937_64 rng(path_seed);
  std::uniform_int_distribution<std::size_t> pick(0, atoms.size() - 1);
  std::vector<std::size_t> path(static_cast<std::size_t>(n));
  std::vector<S> maxima(grid.size());
  for (int s = 0; s < path_samples && cert.pathwise_convex; ++s) {
    for (auto &j : path) j = pick(rng);
    for (std::size_t k = 0; k < grid.size(); ++k) {
      const S cost = fam.cost_at(grid[k]);
      std::optional<S> best;
      for (int h = 0; h < n; ++h) {
        const S &atom = atoms[path[static_cast<std::size_t>(h)]];
        const S x = approx_eq(atom, S(1)) ? S(1) : S(grid[k] * atom);
        S y = x - S(h + 1) * cost;
        if (!best || *best < y) best = std::move(y);
      }
      maxima[k] = *best;
    }
    if (auto k = detail::convexity_violation(grid, maxima, tol))
      fail(cert.pathwise_convex, "pathwise-convex", grid[*k]);
  }
  return cert;
}

}  // namespace prophet_gap
