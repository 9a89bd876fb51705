#pragma once

#include <array>
#include <cmath>
#include <string>
#include <utility>

#include "prophet_gap/error.hpp"
#include "prophet_gap/scalar.hpp"

namespace prophet_gap {

/// Largest integer strictly smaller than x. Differs from floor at integers:
/// bracket(2) == 1. Real inputs within kEpsNum of an integer snap to it first.
long bracket(const Rational &x);
long bracket(double x);

/// Smallest integer >= x (used for the extremal horizon ceil(1/c) + 1).
long ceiling(const Rational &x);
long ceiling(double x);

/// The corrected bound for fixed cost 0 < c <= 1:
/// [1/c] c (1-c)^([1/c]+1) for c <= 1/2, (1-c)/4 for c >= 1/2.
template <Scalar S>
S bound_part_a(const S &c) {
  if (!(c > S(0)) || c > S(1)) throw Error("cost-out-of-range", "c = " + to_string(c));
  if (c > S(1) / S(2)) return (S(1) - c) / S(4);
  const long k = bracket(S(S(1) / c));
  return S(k) * c * pow_int(S(S(1) - c), static_cast<unsigned>(k + 1));
}

/// d_n = (n-1) (n/(n+1))^n / (n+1), the sharp bound for horizon n.
template <Scalar S>
S bound_part_b(long n) {
  if (n < 1) throw Error("horizon-too-small", "n = " + std::to_string(n));
  const S ratio = S(n) / S(n + 1);
  return S(n - 1) * pow_int(ratio, static_cast<unsigned>(n)) / S(n + 1);
}

/// e^{-1} in real mode; in rational mode the upper bound 0.3678794412.
template <Scalar S>
S bound_part_c() {
  if constexpr (is_exact_v<S>)
    return parse_rational("0.3678794412");
  else
    return std::exp(-1.0);
}

/// The bounds as originally claimed, before the correction:
/// (a) [1/c] c (1-c)^([1/c]+1) for every c, (b) (1 - 1/n)^(n+1).
template <Scalar S>
std::pair<S, S> original_claims(const S &c, long n) {
  if (!(c > S(0)) || c > S(1)) throw Error("cost-out-of-range", "c = " + to_string(c));
  if (n < 1) throw Error("horizon-too-small", "n = " + std::to_string(n));
  const long k = bracket(S(S(1) / c));
  S claimed_a = S(k) * c * pow_int(S(S(1) - c), static_cast<unsigned>(k + 1));
  S claimed_b = pow_int(S(S(1) - S(1) / S(n)), static_cast<unsigned>(n + 1));
  return {std::move(claimed_a), std::move(claimed_b)};
}

template <Scalar S>
struct BoundReport {
  S part_a;
  S part_b;
  S part_c;
  S claimed_a_original;
  S claimed_b_original;
};

template <Scalar S>
BoundReport<S> bound_report(const S &c, long n) {
  auto [claimed_a, claimed_b] = original_claims(c, n);
  return {bound_part_a(c), bound_part_b<S>(n), bound_part_c<S>(), std::move(claimed_a),
          std::move(claimed_b)};
}

/// Hill-Kertz zero-cost constants b_n, quoted to the cited decimals (cited,
/// not computed), next to the matching d_n.
struct CitedConstant {
  int n;
  double b_n;
  Rational d_n;
};
std::array<CitedConstant, 3> hill_kertz_cited();

/// The claim covering n >= 5: d_n > 1/4 on n = 5..n_max.
bool d_n_exceeds_quarter(long n_max);

}  // namespace prophet_gap
