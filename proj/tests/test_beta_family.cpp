#include <doctest.h>

#include <random>

#include "prophet_gap/beta_family.hpp"
#include "prophet_gap/generators.hpp"
#include "test_support.hpp"

using namespace prophet_gap;
using test_support::law;
using test_support::q;

namespace {

BetaFamily<Rational> half_quarter() {
  return build_beta_family(Instance<Rational>(bernoulli(q("1/2")), q("1/4"), 2));
}

}  // namespace

TEST_CASE("build_beta_family on Bernoulli(1/2), c = 1/4") {
  const auto fam = half_quarter();
  CHECK(fam.p_one == q("1/2"));
  CHECK(fam.c_prime == q("-1/4"));
  CHECK(fam.beta_star == 2);
  CHECK(fam.cost_at(0) == q("1/2"));
  CHECK(fam.cost_at(1) == q("1/4"));
  CHECK(fam.cost_at(2) == 0);
}

TEST_CASE("Bernoulli(p) with c < p") {
  for (const char *p_text : {"1/2", "2/3", "3/4", "9/10"}) {
    const Rational p = q(p_text);
    const Rational c = p / 3;
    const auto fam = build_beta_family(Instance<Rational>(bernoulli(p), c, 3));
    CHECK(fam.c_prime == c - p);
    CHECK(fam.beta_star == p / (p - c));
  }
}

TEST_CASE("build_beta_family rejects inadmissible bases") {
  const auto code = [](const Instance<Rational> &inst) {
    try {
      build_beta_family(inst);
    } catch (const Error &e) {
      return e.code();
    }
    return std::string("no-error");
  };
  CHECK(code(Instance<Rational>(bernoulli(q("1/3")), q("1/3"), 2)) == "mean-not-exceeding-cost");
  CHECK(code(Instance<Rational>(bernoulli(q("1/2")), 0, 2)) == "zero-cost");
  // 1/2 is not v_1 = 3/8
  CHECK(code(Instance<Rational>(law({"0", "1/2", "1"}, {"1/4", "1/2", "1/4"}), q("1/8"), 2)) ==
        "inadmissible-base");
  // no mass at 0
  CHECK(code(Instance<Rational>(law({"3/8", "1"}, {"1/2", "1/2"}), q("1/8"), 1)) == "inadmissible-base");
}

TEST_CASE("instance_at") {
  const auto fam = half_quarter();
  const auto zero = instance_at(fam, Rational(0));
  CHECK(zero.dist == bernoulli(q("1/2")));
  CHECK(zero.cost == q("1/2"));
  CHECK(instance_at(fam, Rational(2)).cost == 0);
  CHECK_THROWS_WITH_AS(instance_at(fam, Rational(3)), doctest::Contains("beta-out-of-range"), Error);
  CHECK_THROWS_AS(instance_at(fam, Rational(-1)), Error);

  // interior atom v_1 = 3/8 is scaled, 0 and 1 stay
  const Instance<Rational> base(law({"0", "3/8", "1"}, {"1/4", "2/5", "7/20"}), q("1/8"), 2);
  const auto chain = build_beta_family(base);
  CHECK(instance_at(chain, q("1/2")).dist == law({"0", "3/16", "1"}, {"1/4", "2/5", "7/20"}));
  CHECK(instance_at(chain, Rational(0)).dist == law({"0", "1"}, {"13/20", "7/20"}));
}

TEST_CASE("values along the family scale linearly") {
  const auto fam = half_quarter();
  CHECK(solve(instance_at(fam, Rational(0))).value() == 0);
  CHECK(solve(instance_at(fam, Rational(1))).value() == q("3/8"));
  CHECK(solve(instance_at(fam, Rational(2))).value() == q("3/4"));
}

TEST_CASE("certify the worked example") {
  const auto cert = certify(half_quarter());
  CHECK(cert.passed());
  CHECK(cert.gap_at_zero == q("1/8"));
  CHECK(cert.gap_at_one == q("1/16"));
  CHECK(cert.gap_at_star == 0);
  CHECK(cert.tolerance == 0.0);
  REQUIRE(cert.table.size() >= 41);
  CHECK(cert.table.front().beta == 0);
  CHECK(cert.table.back().beta == 2);
  CHECK(std::any_of(cert.table.begin(), cert.table.end(), [](const auto &row) { return row.beta == 1; }));
}

TEST_CASE("convexity_violation") {
  const std::vector<Rational> x{0, 1, 2, 3};
  CHECK_FALSE(detail::convexity_violation(x, std::vector<Rational>{0, 1, 4, 9}, 0.0).has_value());
  CHECK_FALSE(detail::convexity_violation(x, std::vector<Rational>{3, 2, 1, 0}, 0.0).has_value());
  CHECK(detail::convexity_violation(x, std::vector<Rational>{0, 2, 3, 3}, 0.0).has_value());
}

TEST_CASE("property: random admissible bases certify in rational mode") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> horizon(1, 4);
  for (int trial = 0; trial < 25; ++trial) {
    const auto base = random_beta_base(rng, 3, horizon(rng));
    const auto fam = build_beta_family(base);
    for (std::size_t i = 0; i < fam.base_values.size(); ++i) {
      CHECK(solve(instance_at(fam, fam.beta_star)).values[i] == fam.beta_star * fam.base_values[i]);
    }
    const auto cert = certify(fam, 17, 64, static_cast<std::uint64_t>(trial));
    CHECK_MESSAGE(cert.passed(), cert.failed_check);
    CHECK(cert.gap_at_one <= std::max(cert.gap_at_zero, cert.gap_at_star));
  }
}

TEST_CASE("property: real-mode certificates agree") {
  std::mt19937_64 rng(78);
  for (int trial = 0; trial < 15; ++trial) {
    const auto base = random_beta_base(rng, 3, 4);
    const Instance<double> real(to_real(base.dist), base.cost.get_d(), base.horizon);
    const auto cert = certify(build_beta_family(real), 41, 64, 1);
    CHECK_MESSAGE(cert.passed(), cert.failed_check);
    CHECK(cert.gap_at_one == doctest::Approx(solve(base).gap.get_d()).epsilon(1e-10));
  }
}
