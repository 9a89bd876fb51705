#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <type_traits>

namespace prophet_gap {

using Rational = mpq_class;

// Comparison tolerance for real-mode arithmetic; atoms closer than this merge.
inline constexpr double kEpsNum = 1e-12;

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr const char *mode = "rational";
  static constexpr double eps = 0.0;

  static bool eq(const Rational &a, const Rational &b) { return a == b; }
  static bool le(const Rational &a, const Rational &b) { return a <= b; }
  static bool lt(const Rational &a, const Rational &b) { return a < b; }
  static double to_double(const Rational &a) { return a.get_d(); }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static constexpr const char *mode = "real";
  static constexpr double eps = kEpsNum;

  static bool eq(double a, double b) { return a - b <= eps && b - a <= eps; }
  static bool le(double a, double b) { return a <= b + eps; }
  static bool lt(double a, double b) { return a < b - eps; }
  static double to_double(double a) { return a; }
};

template <class S>
concept Scalar = requires { ScalarTraits<S>::exact; };

template <Scalar S>
inline constexpr bool is_exact_v = ScalarTraits<S>::exact;

// Tolerant comparisons: exact in rational mode, within kEpsNum in real mode.
template <Scalar S>
bool approx_eq(const S &a, const S &b) { return ScalarTraits<S>::eq(a, b); }
template <Scalar S>
bool approx_le(const S &a, const S &b) { return ScalarTraits<S>::le(a, b); }
template <Scalar S>
bool approx_lt(const S &a, const S &b) { return ScalarTraits<S>::lt(a, b); }

template <Scalar S>
double to_double(const S &a) { return ScalarTraits<S>::to_double(a); }

template <Scalar S>
S pow_int(S base, unsigned exponent) {
  S result(1);
  while (exponent) {
    if (exponent & 1u) result *= base;
    base *= base;
    exponent >>= 1u;
  }
  return result;
}

// Integer, decimal ("0.25", "1e-3") or fraction ("1/3") text, parsed exactly.
Rational parse_rational(std::string_view text);
// Same grammar, evaluated in binary64.
double parse_real(std::string_view text);

// Exact rational of the shortest decimal that round-trips to x, so 0.1 -> 1/10.
Rational rational_from_decimal(double x);

// "p/q" (or "p" for integers) in rational mode, shortest round-trip decimal
// in real mode.
std::string to_string(const Rational &a);
std::string to_string(double a);

template <Scalar S>
S parse_scalar(std::string_view text) {
  if constexpr (std::is_same_v<S, Rational>)
    return parse_rational(text);
  else
    return parse_real(text);
}

}  // namespace prophet_gap
