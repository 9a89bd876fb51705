#pragma once

// Seeded generators of small rational instances, shared by the verify
// command and the test suites.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "prophet_gap/reduction.hpp"

namespace prophet_gap {

/// Random law with 1..max_atoms distinct atoms k/denominator in [0, 1] and
/// positive integer weights (1..9) normalized.
inline FiniteDistribution<Rational> random_rational_distribution(std::mt19937_64 &rng,
                                                                 int max_atoms,
                                                                 int denominator = 12) {
  std::uniform_int_distribution<int> count(1, max_atoms);
  std::uniform_int_distribution<int> numerator(0, denominator);
  std::uniform_int_distribution<int> weight(1, 9);
  const int m = count(rng);
  std::set<int> numerators;
  while (static_cast<int>(numerators.size()) < m) numerators.insert(numerator(rng));
  std::vector<std::pair<Rational, Rational>> masses;
  int total = 0;
  for (int k : numerators) {
    const int w = weight(rng);
    total += w;
    masses.emplace_back(Rational(k, denominator), Rational(w));
  }
  for (auto &mass : masses) {
    mass.first.canonicalize();
    mass.second /= total;
  }
  return FiniteDistribution<Rational>::from_masses(std::move(masses));
}

/// Random rational cost k/denominator with k in [lo, hi].
inline Rational random_rational_cost(std::mt19937_64 &rng, int lo, int hi, int denominator) {
  std::uniform_int_distribution<int> numerator(lo, hi);
  Rational c(numerator(rng), denominator);
  c.canonicalize();
  return c;
}

/// Instance satisfying x_* = 0, x^* = 1 with c > 0: atoms 0 and 1 plus up to
/// max_interior interior atoms; cost in (0, 1).
inline Instance<Rational> random_normalized_instance(std::mt19937_64 &rng, int max_interior,
                                                     int horizon) {
  std::uniform_int_distribution<int> count(0, max_interior);
  std::uniform_int_distribution<int> numerator(1, 11);
  std::uniform_int_distribution<int> weight(1, 9);
  std::set<int> interior;
  const int m = count(rng);
  while (static_cast<int>(interior.size()) < m) interior.insert(numerator(rng));
  std::vector<std::pair<Rational, Rational>> masses;
  int total = 0;
  const auto add = [&](Rational atom) {
    const int w = weight(rng);
    total += w;
    atom.canonicalize();
    masses.emplace_back(std::move(atom), Rational(w));
  };
  add(Rational(0));
  add(Rational(1));
  for (int k : interior) add(Rational(k, 12));
  for (auto &mass : masses) mass.second /= total;
  return Instance<Rational>(FiniteDistribution<Rational>::from_masses(std::move(masses)),
                            random_rational_cost(rng, 1, 23, 24), horizon);
}

/// Base for the beta family: a normalized instance with E X > c pushed onto
/// {0, v_1, ..., v_{n-1}, 1} by balayage_chain, so it is an admissible beta-family base.
inline Instance<Rational> random_beta_base(std::mt19937_64 &rng, int max_interior,
                                                     int horizon) {
  for (;;) {
    Instance<Rational> inst = random_normalized_instance(rng, max_interior, horizon);
    const Rational m = mean(inst.dist);
    if (!(m > inst.cost)) {
      // Redraw the cost below the mean: c = m * k/24, k in 1..23.
      inst.cost = m * random_rational_cost(rng, 1, 23, 24);
    }
    if (!(inst.cost > 0)) continue;
    return balayage_chain(inst).output;
  }
}

}  // namespace prophet_gap
