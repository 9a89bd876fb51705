#include "prophet_gap/bounds.hpp"

#include <cmath>

namespace prophet_gap {

long bracket(const Rational &x) {
  mpz_class floor_value;
  mpz_fdiv_q(floor_value.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  if (x.get_den() == 1) floor_value -= 1;
  return floor_value.get_si();
}

long bracket(double x) {
  const double nearest = std::round(x);
  if (std::abs(x - nearest) <= kEpsNum) return static_cast<long>(nearest) - 1;
  return static_cast<long>(std::floor(x));
}

long ceiling(const Rational &x) {
  mpz_class value;
  mpz_cdiv_q(value.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return value.get_si();
}

long ceiling(double x) {
  const double nearest = std::round(x);
  if (std::abs(x - nearest) <= kEpsNum) return static_cast<long>(nearest);
  return static_cast<long>(std::ceil(x));
}

std::array<CitedConstant, 3> hill_kertz_cited() {
  return {{{2, 0.063, bound_part_b<Rational>(2)},
           {3, 0.077, bound_part_b<Rational>(3)},
           {4, 0.085, bound_part_b<Rational>(4)}}};
}

bool d_n_exceeds_quarter(long n_max) {
  const Rational quarter(1, 4);
  for (long n = 5; n <= n_max; ++n)
    if (!(bound_part_b<Rational>(n) > quarter)) return false;
  return true;
}

}  // namespace prophet_gap
