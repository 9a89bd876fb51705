#pragma once

// Test-only helpers and brute-force oracles. Nothing here calls the engine's
// recursions, so they can be used to freeze expected values.

#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "prophet_gap/distribution.hpp"

namespace test_support {

using prophet_gap::FiniteDistribution;
using prophet_gap::Rational;

inline Rational q(const char *text) { return prophet_gap::parse_rational(text); }

inline FiniteDistribution<Rational> law(std::initializer_list<const char *> atoms,
                                        std::initializer_list<const char *> weights) {
  std::vector<Rational> a;
  std::vector<Rational> w;
  for (const char *t : atoms) a.push_back(q(t));
  for (const char *t : weights) w.push_back(q(t));
  return FiniteDistribution<Rational>(std::move(a), std::move(w));
}

// E f(X_1, ..., X_n) over the product law, by recursion over outcomes.
template <class S>
S expect_over_paths(const FiniteDistribution<S> &d, int n,
                    const std::function<S(const std::vector<S> &)> &f) {
  std::vector<S> path;
  std::function<S(int)> recurse = [&](int depth) -> S {
    if (depth == n) return f(path);
    S total(0);
    for (std::size_t j = 0; j < d.size(); ++j) {
      path.push_back(d.atoms()[j]);
      total += d.weights()[j] * recurse(depth + 1);
      path.pop_back();
    }
    return total;
  };
  return recurse(0);
}

// E max_i (X_i - i c).
template <class S>
S brute_prophet(const FiniteDistribution<S> &d, const S &c, int n) {
  return expect_over_paths<S>(d, n, [&](const std::vector<S> &xs) {
    S best = xs[0] - c;
    for (std::size_t i = 1; i < xs.size(); ++i) {
      S y = xs[i] - S(static_cast<long>(i + 1)) * c;
      if (best < y) best = y;
    }
    return best;
  });
}

// E max{X, Y} for independent X ~ dx, Y ~ dy.
template <class S>
S expect_max_pair(const FiniteDistribution<S> &dx, const FiniteDistribution<S> &dy) {
  S total(0);
  for (std::size_t i = 0; i < dx.size(); ++i)
    for (std::size_t j = 0; j < dy.size(); ++j) {
      const S &x = dx.atoms()[i];
      const S &y = dy.atoms()[j];
      total += dx.weights()[i] * dy.weights()[j] * (x < y ? y : x);
    }
  return total;
}

}  // namespace test_support
