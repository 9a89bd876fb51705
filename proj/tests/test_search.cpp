#include <doctest.h>

#include <cmath>

#include "prophet_gap/bounds.hpp"
#include "prophet_gap/search.hpp"
#include "test_support.hpp"

using namespace prophet_gap;
using test_support::q;

TEST_CASE("bernoulli_gap") {
  CHECK(bernoulli_gap(1.0 / 3, 1.0 / 3, 2) == doctest::Approx(4.0 / 27));
  CHECK(bernoulli_gap(0.5, 0.25, 2) == doctest::Approx(1.0 / 16));
  CHECK(bernoulli_gap(0.5, 0.25, 1) == 0.0);
  CHECK(bernoulli_gap(0.0, 0.5, 3) == 0.0);
}

TEST_CASE("bernoulli_sweep") {
  const auto one = bernoulli_sweep(1, 21);
  CHECK(one.max_gap == doctest::Approx(0.0));

  const auto two = bernoulli_sweep(2, 101);
  CHECK(two.within_bound);
  CHECK(two.below_e_inv);
  CHECK(two.bound == doctest::Approx(4.0 / 27));
  CHECK(two.max_gap >= two.grid_max_gap);
  CHECK(two.max_gap == doctest::Approx(4.0 / 27).epsilon(1e-6));
  CHECK(two.argmax_p == doctest::Approx(1.0 / 3).epsilon(1e-3));

  const auto five = bernoulli_sweep(5, 51);
  CHECK(five.within_bound);
  CHECK(five.max_gap <= bound_part_b<double>(5) + kSearchTolerance);
  CHECK(five.max_gap > 0.99 * bound_part_b<double>(5));

  CHECK_THROWS_AS(bernoulli_sweep(0, 10), Error);
  CHECK_THROWS_AS(bernoulli_sweep(2, 1), Error);
}

TEST_CASE("part_a_sweep") {
  const auto third = part_a_sweep(q("1/3"), 10);
  CHECK(third.predicted_from == 4);
  // 1/c is an integer, so the stage-4 success pays 1 - 4c = -c and adds nothing
  CHECK(third.attained_from == 3);
  CHECK(third.matches_bound);
  CHECK(third.attained_as_predicted);
  CHECK(third.never_exceeds);
  CHECK(third.max_gap == bound_part_a(q("1/3")));
  CHECK(third.gaps.size() == 10);
  CHECK(third.gaps[0] == 0);

  const auto steep = part_a_sweep(q("0.6"), 5);
  CHECK(steep.max_gap == q("0.1"));
  CHECK(steep.success_probability == q("1/2"));
  CHECK(steep.never_exceeds);

  CHECK_THROWS_AS(part_a_sweep(q("0"), 3), Error);
}

TEST_CASE("random_instance_sweep") {
  const auto empty = random_instance_sweep(2, 3, 0, 1);
  CHECK(empty.max_gap == 0.0);
  CHECK(empty.top.empty());

  const auto small = random_instance_sweep(2, 3, 300, 7);
  CHECK(small.all_within);
  CHECK(small.below_e_inv);
  CHECK(small.reduction_consistent);
  CHECK(small.top.size() == 10);
  for (std::size_t i = 1; i < small.top.size(); ++i) CHECK(small.top[i - 1].gap >= small.top[i].gap);
  CHECK(small.refined_gap >= small.max_gap);
  CHECK(small.refined_gap <= bound_part_b<double>(2) + kSearchTolerance);

  const auto again = random_instance_sweep(2, 3, 300, 7);
  CHECK(again.max_gap == small.max_gap);
  CHECK(again.refined_gap == small.refined_gap);

  const auto three = random_instance_sweep(3, 4, 2000, 11);
  CHECK(three.all_within);
  CHECK(three.refined_gap >= 0.98 * bound_part_b<double>(3));
}

TEST_CASE("ratio_escape") {
  const auto w = ratio_escape(2, 100.0);
  CHECK(w.horizon == 2);
  CHECK(w.cost == q("1/3"));
  CHECK(w.p > w.cost);
  CHECK(w.ratio >= 100);
  CHECK(w.ratio == w.prophet / w.value);
  CHECK(w.value > 0);

  CHECK_THROWS_WITH_AS(ratio_escape(1, 2.0), doctest::Contains("search-budget-exhausted"), Error);
}
