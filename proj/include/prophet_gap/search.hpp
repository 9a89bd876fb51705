#pragma once

#include <cstdint>
#include <vector>

#include "prophet_gap/stopping_engine.hpp"

namespace prophet_gap {

/// Real-mode bound checks allow d_n + kSearchTolerance.
inline constexpr double kSearchTolerance = 1e-9;

/// D(Bernoulli(p), c, n) in binary64.
double bernoulli_gap(double p, double c, int n);

struct BernoulliSweepReport {
  int horizon = 0;
  int grid = 0;
  double grid_max_gap = 0.0;  // before refinement
  double max_gap = 0.0;       // after refinement
  double argmax_p = 0.0;
  double argmax_c = 0.0;
  double bound = 0.0;         // d_n
  double largest_excess = 0.0;  // max over all evaluations of D - d_n
  bool within_bound = true;   // every D <= d_n + kSearchTolerance
  bool below_e_inv = true;    // every D < e^{-1}
  std::uint64_t evaluations = 0;
};

/// Evaluates D over the uniform grid (p, c) in [0, 1]^2, then zooms 10x
/// around the maximizer `refine_rounds` times.
BernoulliSweepReport bernoulli_sweep(int n, int grid, int refine_rounds = 3);

struct PartASweepReport {
  Rational cost;
  Rational success_probability;  // c for c <= 1/2, 1/2 otherwise
  std::vector<Rational> gaps;    // D for n = 1..n_max
  Rational max_gap;
  Rational bound;                // bound_part_a(c)
  long predicted_from = 0;       // ceil(1/c) + 1
  long attained_from = -1;       // first n with D == bound, -1 if none
  bool matches_bound = false;    // max over n equals the bound
  bool attained_as_predicted = false;  // D == bound for all n in [predicted_from, n_max]
  bool never_exceeds = true;     // D <= bound for every n
};

/// Solves the extremal Bernoulli instance for cost c at n = 1..n_max
/// (rational mode).
PartASweepReport part_a_sweep(const Rational &c, int n_max);

struct TrialRecord {
  std::uint64_t trial = 0;
  double gap = 0.0;
  double cost = 0.0;
  std::vector<double> atoms;
  std::vector<double> weights;
};

struct RandomSweepReport {
  int horizon = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  double bound = 0.0;
  double max_gap = 0.0;
  bool all_within = true;          // every raw and reduced D <= d_n + tol
  bool below_e_inv = true;
  bool reduction_consistent = true;  // reduced D >= raw D - tol
  std::uint64_t reduced = 0;       // trials that went through the reductions
  std::vector<TrialRecord> top;    // ten largest gaps, descending
  double refined_gap = 0.0;        // best gap after local compass search
  TrialRecord refined;
};

/// Random finite-support instances (up to `atoms_max` uniform atoms, uniform
/// weights, c uniform on [0, 1]); each is optionally pushed through
/// rescale + balayage_chain. The best trials are refined by derivative-free
/// compass search. Deterministic for a given seed regardless of threads.
RandomSweepReport random_instance_sweep(int n, int atoms_max, std::uint64_t trials,
                                        std::uint64_t seed, bool reduce = true,
                                        int refine_evaluations = 4000);

struct RatioWitness {
  int horizon = 0;
  Rational p;
  Rational cost;
  Rational prophet;
  Rational value;
  Rational ratio;
  int iterations = 0;
};

/// Finds Bernoulli(p) with cost c = 1/(n+1) and p slightly above c such that
/// M/V >= target: p - c is halved until the target is met, then bisected back
/// toward the largest admissible gap. Throws search-budget-exhausted.
RatioWitness ratio_escape(int n, double target_ratio, int budget = 200);

}  // namespace prophet_gap
