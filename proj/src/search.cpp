#include "prophet_gap/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "prophet_gap/bounds.hpp"
#include "prophet_gap/parallel.hpp"
#include "prophet_gap/reduction.hpp"

namespace prophet_gap {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct Cell {
  double gap = -std::numeric_limits<double>::infinity();
  double p = 0.0;
  double c = 0.0;
};

// Row-major scan of a (p, c) lattice; ties keep the first cell in scan order.
struct LatticeResult {
  Cell best;
  double largest = -std::numeric_limits<double>::infinity();
  std::uint64_t evaluations = 0;
};

LatticeResult scan_lattice(int n, double p_lo, double c_lo, double step, int p_count,
                           int c_count) {
  std::vector<LatticeResult> rows(static_cast<std::size_t>(p_count));
  parallel_for(rows.size(), [&](std::size_t i) {
    const double p = std::clamp(p_lo + step * static_cast<double>(i), 0.0, 1.0);
    LatticeResult &row = rows[i];
    for (int j = 0; j < c_count; ++j) {
      const double c = std::clamp(c_lo + step * j, 0.0, 1.0);
      const double gap = bernoulli_gap(p, c, n);
      ++row.evaluations;
      if (gap > row.best.gap) row.best = {gap, p, c};
    }
    row.largest = row.best.gap;
  });
  LatticeResult merged;
  for (const auto &row : rows) {
    merged.evaluations += row.evaluations;
    merged.largest = std::max(merged.largest, row.largest);
    if (row.best.gap > merged.best.gap) merged.best = row.best;
  }
  return merged;
}

double trial_gap(const FiniteDistribution<double> &d, double c, int n) {
  return solve(Instance<double>(d, c, n)).gap;
}

// Parameter vector: m atoms, m raw weights, cost.
struct Candidate {
  std::vector<double> atoms;
  std::vector<double> weights;
  double cost = 0.0;
};

std::optional<FiniteDistribution<double>> to_distribution(const Candidate &x) {
  double total = 0.0;
  for (double w : x.weights) total += w;
  if (!(total > 0.0)) return std::nullopt;
  std::vector<std::pair<double, double>> masses;
  for (std::size_t j = 0; j < x.atoms.size(); ++j)
    masses.emplace_back(std::clamp(x.atoms[j], 0.0, 1.0), x.weights[j] / total);
  try {
    return FiniteDistribution<double>::from_masses(std::move(masses));
  } catch (const Error &) {
    return std::nullopt;
  }
}

double candidate_gap(const Candidate &x, int n) {
  const auto d = to_distribution(x);
  if (!d) return -std::numeric_limits<double>::infinity();
  return trial_gap(*d, std::clamp(x.cost, 0.0, 1.0), n);
}

// Compass search: try +-step on every coordinate, accept the first
// improvement, halve the step when none improves.
std::pair<Candidate, double> compass_search(Candidate x, int n, int evaluations) {
  double best = candidate_gap(x, n);
  double step = 0.05;
  int used = 1;
  const std::size_t m = x.atoms.size();
  const auto coordinate = [&](Candidate &c, std::size_t k) -> double & {
    if (k < m) return c.atoms[k];
    if (k < 2 * m) return c.weights[k - m];
    return c.cost;
  };
  while (used < evaluations && step > 1e-9) {
    bool improved = false;
    for (std::size_t k = 0; k <= 2 * m && used < evaluations; ++k) {
      for (double direction : {1.0, -1.0}) {
        Candidate trial = x;
        double &value = coordinate(trial, k);
        value = std::clamp(value + direction * step, 0.0, 1.0);
        const double gap = candidate_gap(trial, n);
        ++used;
        if (gap > best) {
          best = gap;
          x = std::move(trial);
          improved = true;
          break;
        }
      }
    }
    if (!improved) step /= 2.0;
  }
  return {std::move(x), best};
}

}  // namespace

double bernoulli_gap(double p, double c, int n) {
  return solve(Instance<double>(bernoulli(p), c, n)).gap;
}

BernoulliSweepReport bernoulli_sweep(int n, int grid, int refine_rounds) {
  if (n < 1) throw Error("horizon-too-small", "n = " + std::to_string(n));
  if (grid < 2) throw Error("grid-too-small", "grid = " + std::to_string(grid));
  BernoulliSweepReport report;
  report.horizon = n;
  report.grid = grid;
  report.bound = bound_part_b<double>(n);
  const double e_inv = bound_part_c<double>();

  double step = 1.0 / (grid - 1);
  LatticeResult result = scan_lattice(n, 0.0, 0.0, step, grid, grid);
  report.grid_max_gap = result.best.gap;
  Cell best = result.best;
  double largest = result.largest;
  std::uint64_t evaluations = result.evaluations;
  for (int round = 0; round < refine_rounds; ++round) {
    const double fine = step / 10.0;
    const LatticeResult local =
        scan_lattice(n, best.p - step, best.c - step, fine, 21, 21);
    evaluations += local.evaluations;
    largest = std::max(largest, local.largest);
    if (local.best.gap > best.gap) best = local.best;
    step = fine;
  }
  report.max_gap = best.gap;
  report.argmax_p = best.p;
  report.argmax_c = best.c;
  report.evaluations = evaluations;
  report.largest_excess = largest - report.bound;
  report.within_bound = largest <= report.bound + kSearchTolerance;
  report.below_e_inv = largest < e_inv;
  return report;
}

PartASweepReport part_a_sweep(const Rational &c, int n_max) {
  if (!(c > 0) || c > 1) throw Error("cost-out-of-range", "c = " + to_string(c));
  if (n_max < 1) throw Error("horizon-too-small", "n_max = " + std::to_string(n_max));
  PartASweepReport report;
  report.cost = c;
  const Rational half(1, 2);
  report.success_probability = c <= half ? c : half;
  report.bound = bound_part_a(c);
  report.predicted_from = ceiling(Rational(1 / c)) + 1;
  const auto dist = bernoulli(report.success_probability);
  report.max_gap = 0;
  for (int n = 1; n <= n_max; ++n) {
    Rational gap = solve(Instance<Rational>(dist, c, n)).gap;
    if (gap > report.max_gap) report.max_gap = gap;
    if (gap > report.bound) report.never_exceeds = false;
    if (gap == report.bound && report.attained_from < 0) report.attained_from = n;
    report.gaps.push_back(std::move(gap));
  }
  report.matches_bound = report.max_gap == report.bound;
  report.attained_as_predicted = report.predicted_from <= n_max;
  for (long n = report.predicted_from; n <= n_max; ++n)
    if (report.gaps[static_cast<std::size_t>(n - 1)] != report.bound)
      report.attained_as_predicted = false;
  return report;
}

RandomSweepReport random_instance_sweep(int n, int atoms_max, std::uint64_t trials,
                                        std::uint64_t seed, bool reduce,
                                        int refine_evaluations) {
  if (n < 1) throw Error("horizon-too-small", "n = " + std::to_string(n));
  if (atoms_max < 1) throw Error("atoms-too-few", "atoms_max = " + std::to_string(atoms_max));
  RandomSweepReport report;
  report.horizon = n;
  report.trials = trials;
  report.seed = seed;
  report.bound = bound_part_b<double>(n);
  const double limit = report.bound + kSearchTolerance;
  const double e_inv = bound_part_c<double>();

  struct Outcome {
    TrialRecord record;
    double largest = 0.0;  // max of raw and reduced gap
    bool reduced = false;
    bool consistent = true;
  };
  std::vector<Outcome> outcomes(trials);
  parallel_for(trials, [&](std::size_t t) {
    std::mt19937_64 rng(splitmix64(seed ^ splitmix64(t)));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> count(1, atoms_max);
    const int m = count(rng);
    std::vector<std::pair<double, double>> masses;
    double total = 0.0;
    for (int j = 0; j < m; ++j) {
      const double w = 1.0 - unit(rng);  // (0, 1]
      masses.emplace_back(unit(rng), w);
      total += w;
    }
    for (auto &mass : masses) mass.second /= total;
    const auto dist = FiniteDistribution<double>::from_masses(std::move(masses));
    const double cost = unit(rng);

    Outcome &out = outcomes[t];
    out.record.trial = t;
    out.record.cost = cost;
    out.record.atoms.assign(dist.atoms().begin(), dist.atoms().end());
    out.record.weights.assign(dist.weights().begin(), dist.weights().end());
    out.record.gap = trial_gap(dist, cost, n);
    out.largest = out.record.gap;
    if (reduce && cost > 0.0) {
      const Instance<double> inst(dist, cost, n);
      const auto normalized = rescale(inst);
      const auto chained = balayage_chain(normalized.output);
      out.reduced = true;
      out.consistent = normalized.gap_after >= out.record.gap - kSearchTolerance &&
                       chained.gap_after >= normalized.gap_after - kSearchTolerance;
      out.largest = std::max({out.largest, normalized.gap_after, chained.gap_after});
    }
  });

  std::vector<const Outcome *> order;
  for (const auto &out : outcomes) {
    order.push_back(&out);
    report.max_gap = std::max(report.max_gap, out.record.gap);
    if (out.largest > limit) report.all_within = false;
    if (!(out.largest < e_inv)) report.below_e_inv = false;
    if (!out.consistent) report.reduction_consistent = false;
    if (out.reduced) ++report.reduced;
  }
  std::stable_sort(order.begin(), order.end(), [](const Outcome *l, const Outcome *r) {
    return l->record.gap > r->record.gap;
  });
  for (std::size_t k = 0; k < std::min<std::size_t>(10, order.size()); ++k)
    report.top.push_back(order[k]->record);

  // Refine the three best starting points; keep the overall best.
  report.refined_gap = report.max_gap;
  if (!report.top.empty()) report.refined = report.top.front();
  const std::size_t starts = std::min<std::size_t>(3, report.top.size());
  std::vector<std::pair<Candidate, double>> refined(starts);
  parallel_for(starts, [&](std::size_t k) {
    const TrialRecord &r = report.top[k];
    refined[k] = compass_search({r.atoms, r.weights, r.cost}, n, refine_evaluations);
  });
  for (std::size_t k = 0; k < starts; ++k) {
    if (refined[k].second > limit) report.all_within = false;
    if (refined[k].second > report.refined_gap) {
      report.refined_gap = refined[k].second;
      const auto d = to_distribution(refined[k].first);
      report.refined = {report.top[k].trial, refined[k].second,
                        std::clamp(refined[k].first.cost, 0.0, 1.0),
                        {d->atoms().begin(), d->atoms().end()},
                        {d->weights().begin(), d->weights().end()}};
    }
  }
  return report;
}

RatioWitness ratio_escape(int n, double target_ratio, int budget) {
  if (n < 1) throw Error("horizon-too-small", "n = " + std::to_string(n));
  const Rational target = rational_from_decimal(target_ratio);
  const Rational cost(1, n + 1);

  RatioWitness witness;
  witness.horizon = n;
  witness.cost = cost;
  // ratio(delta) for p = c + delta; nullopt when V <= 0.
  const auto evaluate = [&](const Rational &delta, RatioWitness &into) {
    const Rational p = cost + delta;
    const auto profile = solve(Instance<Rational>(bernoulli(p), cost, n));
    if (!(profile.value() > 0)) return false;
    into.p = p;
    into.prophet = profile.prophet;
    into.value = profile.value();
    into.ratio = profile.prophet / profile.value();
    return true;
  };

  Rational failing = 1 - cost;  // delta with p = 1
  Rational delta = (1 - cost) / 2;
  int iterations = 0;
  bool found = false;
  for (; iterations < budget; ++iterations) {
    RatioWitness candidate = witness;
    if (evaluate(delta, candidate) && candidate.ratio >= target) {
      witness = std::move(candidate);
      found = true;
      break;
    }
    failing = delta;
    delta /= 2;
  }
  if (!found)
    throw Error("search-budget-exhausted",
                "no M/V >= " + to_string(target_ratio) + " within " + std::to_string(budget) +
                    " halvings at n = " + std::to_string(n));

  // Bisect between the last failing delta and the witness toward the
  // largest delta that still meets the target.
  Rational good = delta;
  for (int step = 0; step < 20 && iterations < budget; ++step, ++iterations) {
    const Rational middle = (good + failing) / 2;
    RatioWitness candidate = witness;
    if (evaluate(middle, candidate) && candidate.ratio >= target) {
      witness = std::move(candidate);
      good = middle;
    } else {
      failing = middle;
    }
  }
  witness.iterations = iterations + 1;
  return witness;
}

}  // namespace prophet_gap
