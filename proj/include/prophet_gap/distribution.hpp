#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "prophet_gap/error.hpp"
#include "prophet_gap/scalar.hpp"

namespace prophet_gap {

/// A finitely supported law on [0, 1].
///
/// Atoms are strictly increasing and every weight is positive; the weights
/// sum to one (exactly in rational mode, within kEpsNum per atom in real
/// mode). Values are immutable once built.
template <Scalar S>
class FiniteDistribution {
 public:
  /// Validating constructor; the input must already be canonical.
  FiniteDistribution(std::vector<S> atoms, std::vector<S> weights)
      : atoms_(std::move(atoms)), weights_(std::move(weights)) {
    validate();
  }

  /// Builds a distribution from unordered (atom, weight) pairs: sorts,
  /// merges atoms that coincide (within kEpsNum in real mode) and drops
  /// zero weights before validating.
  static FiniteDistribution from_masses(std::vector<std::pair<S, S>> masses) {
    std::sort(masses.begin(), masses.end(),
              [](const auto &l, const auto &r) { return l.first < r.first; });
    std::vector<S> atoms;
    std::vector<S> weights;
    for (auto &[atom, weight] : masses) {
      if (!atoms.empty() && approx_eq(atoms.back(), atom)) {
        weights.back() += weight;
        continue;
      }
      atoms.push_back(std::move(atom));
      weights.push_back(std::move(weight));
    }
    std::vector<S> kept_atoms;
    std::vector<S> kept_weights;
    for (std::size_t j = 0; j < atoms.size(); ++j) {
      if (weights[j] == S(0)) continue;
      kept_atoms.push_back(std::move(atoms[j]));
      kept_weights.push_back(std::move(weights[j]));
    }
    return FiniteDistribution(std::move(kept_atoms), std::move(kept_weights));
  }

  std::span<const S> atoms() const { return atoms_; }
  std::span<const S> weights() const { return weights_; }
  std::size_t size() const { return atoms_.size(); }

  /// x_*, the smallest support point.
  const S &min_atom() const { return atoms_.front(); }
  /// x^*, the largest support point.
  const S &max_atom() const { return atoms_.back(); }

  /// P(X = x); zero when x is not an atom.
  S mass_at(const S &x) const {
    for (std::size_t j = 0; j < atoms_.size(); ++j)
      if (approx_eq(atoms_[j], x)) return weights_[j];
    return S(0);
  }

  /// Right-continuous CDF, P(X <= t).
  S cdf(const S &t) const {
    S total(0);
    for (std::size_t j = 0; j < atoms_.size() && approx_le(atoms_[j], t); ++j)
      total += weights_[j];
    return total;
  }

  /// E(max{X, t}).
  S expect_max(const S &t) const {
    S total(0);
    for (std::size_t j = 0; j < atoms_.size(); ++j)
      total += (atoms_[j] < t ? t : atoms_[j]) * weights_[j];
    return total;
  }

  friend bool operator==(const FiniteDistribution &, const FiniteDistribution &) = default;

 private:
  void validate() {
    if (atoms_.empty()) throw Error("empty-distribution");
    if (atoms_.size() != weights_.size())
      throw Error("length-mismatch", "atoms and weights differ in length");
    S total(0);
    for (std::size_t j = 0; j < atoms_.size(); ++j) {
      if (approx_lt(atoms_[j], S(0)) || approx_lt(S(1), atoms_[j]))
        throw Error("atom-out-of-range", "atom " + std::to_string(j) + " = " +
                                             to_string(atoms_[j]) + " not in [0,1]");
      if constexpr (!is_exact_v<S>) atoms_[j] = std::clamp(atoms_[j], 0.0, 1.0);
      if (j > 0 && !(atoms_[j - 1] < atoms_[j]))
        throw Error("atoms-not-increasing", "at index " + std::to_string(j));
      if (!(weights_[j] > S(0)))
        throw Error("weight-not-positive", "weight " + std::to_string(j) + " = " +
                                               to_string(weights_[j]));
      total += weights_[j];
    }
    bool normalized;
    if constexpr (is_exact_v<S>)
      normalized = total == S(1);
    else
      normalized = std::abs(total - 1.0) <= kEpsNum * static_cast<double>(atoms_.size());
    if (!normalized) throw Error("weights-not-normalized", "sum = " + to_string(total));
  }

  std::vector<S> atoms_;
  std::vector<S> weights_;
};

/// Mass p at 1 and 1 - p at 0.
template <Scalar S>
FiniteDistribution<S> bernoulli(const S &p) {
  if (p < S(0) || p > S(1))
    throw Error("probability-out-of-range", "p = " + to_string(p));
  return FiniteDistribution<S>::from_masses({{S(0), S(1) - p}, {S(1), p}});
}

/// A single atom with probability one.
template <Scalar S>
FiniteDistribution<S> point_mass(const S &x) {
  return FiniteDistribution<S>({x}, {S(1)});
}

template <Scalar S>
S mean(const FiniteDistribution<S> &d) {
  S total(0);
  for (std::size_t j = 0; j < d.size(); ++j) total += d.atoms()[j] * d.weights()[j];
  return total;
}

/// Y_a^b: every atom x in [a, b] sends (b - x)/(b - a) of its mass to a and
/// (x - a)/(b - a) to b. Atoms outside [a, b] are untouched; the mean is
/// preserved.
template <Scalar S>
FiniteDistribution<S> balayage(const FiniteDistribution<S> &d, const S &a, const S &b) {
  if (!(a < b)) throw Error("empty-interval", "balayage needs a < b");
  const S width = b - a;
  std::vector<std::pair<S, S>> masses;
  masses.reserve(d.size() + 2);
  for (std::size_t j = 0; j < d.size(); ++j) {
    const S &x = d.atoms()[j];
    const S &w = d.weights()[j];
    if (approx_lt(x, a) || approx_lt(b, x)) {
      masses.emplace_back(x, w);
      continue;
    }
    S share = (b - x) / width;
    if constexpr (!is_exact_v<S>) share = std::clamp(share, 0.0, 1.0);
    const S to_a = w * share;
    masses.emplace_back(a, to_a);
    masses.emplace_back(b, S(w - to_a));
  }
  return FiniteDistribution<S>::from_masses(std::move(masses));
}

/// Maps [lo, hi] affinely onto [0, 1]: x -> (x - lo)/(hi - lo).
template <Scalar S>
FiniteDistribution<S> affine_rescale(const FiniteDistribution<S> &d, const S &lo, const S &hi) {
  if (!(lo < hi)) throw Error("empty-interval", "affine_rescale needs lo < hi");
  std::vector<S> atoms;
  atoms.reserve(d.size());
  const S width = hi - lo;
  for (const S &x : d.atoms()) {
    if (approx_lt(x, lo) || approx_lt(hi, x))
      throw Error("atom-out-of-range", to_string(x) + " outside [" + to_string(lo) + ", " +
                                           to_string(hi) + "]");
    atoms.push_back((x - lo) / width);
  }
  return FiniteDistribution<S>(std::move(atoms), {d.weights().begin(), d.weights().end()});
}

/// Rational distribution converted to binary64.
inline FiniteDistribution<double> to_real(const FiniteDistribution<Rational> &d) {
  std::vector<std::pair<double, double>> masses;
  for (std::size_t j = 0; j < d.size(); ++j)
    masses.emplace_back(d.atoms()[j].get_d(), d.weights()[j].get_d());
  return FiniteDistribution<double>::from_masses(std::move(masses));
}
inline const FiniteDistribution<double> &to_real(const FiniteDistribution<double> &d) { return d; }

}  // namespace prophet_gap
