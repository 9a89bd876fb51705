#include "prophet_gap/scalar.hpp"

#include <cctype>
#include <charconv>
#include <string>

#include "prophet_gap/error.hpp"

namespace prophet_gap {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

// [+-]digits[.digits][(e|E)[+-]digits]
Rational parse_decimal(std::string_view s, std::string_view whole) {
  std::size_t i = 0;
  bool negative = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) negative = s[i++] == '-';

  std::string digits;
  long scale = 0;
  bool any_digit = false;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    digits.push_back(s[i++]);
    any_digit = true;
  }
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      digits.push_back(s[i++]);
      --scale;
      any_digit = true;
    }
  }
  if (!any_digit) throw Error("invalid-number", std::string(whole));
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    long exponent = 0;
    auto [ptr, ec] = std::from_chars(s.data() + i + (i < s.size() && s[i] == '+'),
                                     s.data() + s.size(), exponent);
    if (ec != std::errc() || ptr != s.data() + s.size())
      throw Error("invalid-number", std::string(whole));
    scale += exponent;
    i = s.size();
  }
  if (i != s.size()) throw Error("invalid-number", std::string(whole));

  mpz_class numerator(digits, 10);
  mpz_class denominator = 1;
  mpz_class ten_power;
  mpz_ui_pow_ui(ten_power.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
  if (scale < 0)
    denominator = ten_power;
  else
    numerator *= ten_power;
  Rational result(numerator, denominator);
  result.canonicalize();
  return negative ? Rational(-result) : result;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw Error("invalid-number", "empty string");
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return parse_decimal(s, text);
  const Rational num = parse_decimal(trim(s.substr(0, slash)), text);
  const Rational den = parse_decimal(trim(s.substr(slash + 1)), text);
  if (den == 0) throw Error("invalid-number", "zero denominator in '" + std::string(text) + "'");
  return num / den;
}

double parse_real(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.find('/') != std::string_view::npos) return parse_rational(s).get_d();
  double value = 0.0;
  const char *first = s.data() + (!s.empty() && s.front() == '+');
  auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw Error("invalid-number", std::string(text));
  return value;
}

Rational rational_from_decimal(double x) {
  return parse_rational(to_string(x));
}

std::string to_string(const Rational &a) { return a.get_str(); }

std::string to_string(double a) {
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, a);
  return std::string(buffer, ptr);
}

}  // namespace prophet_gap
