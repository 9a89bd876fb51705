#include "prophet_gap/verify.hpp"

#include <functional>
#include <random>

#include "prophet_gap/beta_family.hpp"
#include "prophet_gap/bounds.hpp"
#include "prophet_gap/generators.hpp"
#include "prophet_gap/oracle.hpp"
#include "prophet_gap/search.hpp"

namespace prophet_gap {
namespace {

using nlohmann::json;

class Checklist {
 public:
  void add(std::string name, bool passed, json details = json::object()) {
    checks_.push_back({{"name", name}, {"passed", passed}, {"details", std::move(details)}});
    if (!passed && first_failure_.is_null()) first_failure_ = std::move(name);
  }
  json checks() const { return checks_; }
  const json &first_failure() const { return first_failure_; }

 private:
  json checks_ = json::array();
  json first_failure_ = nullptr;
};

Rational gap_of(const Rational &p, const Rational &c, int n) {
  return solve(Instance<Rational>(bernoulli(p), c, n)).gap;
}

void sharpness(Checklist &list, std::uint64_t) {
  for (int n = 2; n <= 8; ++n) {
    const Rational p(1, n + 1);
    const Rational gap = gap_of(p, p, n);
    const Rational d_n = bound_part_b<Rational>(n);
    list.add("part_b_n" + std::to_string(n), gap == d_n,
             {{"gap", to_string(gap)}, {"d_n", to_string(d_n)}});
  }
  for (const char *text : {"1/10", "1/5", "1/3", "1/2"}) {
    const Rational c = parse_rational(text);
    const long n = ceiling(Rational(1 / c)) + 1;
    const Rational gap = gap_of(c, c, static_cast<int>(n));
    const Rational bound = bound_part_a(c);
    list.add(std::string("part_a_c") + text, gap == bound,
             {{"n", n}, {"gap", to_string(gap)}, {"bound", to_string(bound)}});
  }
  for (const char *text : {"3/5", "3/4"}) {
    const Rational c = parse_rational(text);
    const Rational gap = gap_of(Rational(1, 2), c, 20);
    const Rational bound = bound_part_a(c);
    list.add(std::string("part_a_c") + text, gap == bound,
             {{"n", 20}, {"gap", to_string(gap)}, {"bound", to_string(bound)}});
  }
  const auto sweep = bernoulli_sweep(2, 101);
  list.add("bernoulli_sweep_n2",
           sweep.within_bound && sweep.below_e_inv && sweep.max_gap >= sweep.bound - 1e-4,
           {{"max_gap", sweep.max_gap},
            {"argmax_p", sweep.argmax_p},
            {"argmax_c", sweep.argmax_c},
            {"d_n", sweep.bound}});
}

void counterexamples(Checklist &list, std::uint64_t) {
  const Rational third(1, 3);
  const Rational achieved_b = gap_of(third, third, 2);
  const Rational claimed_b = original_claims(Rational(1, 2), 2).second;
  list.add("original_b_fails_n2", achieved_b > claimed_b,
           {{"achieved", to_string(achieved_b)}, {"claimed", to_string(claimed_b)}});

  const Rational c = parse_rational("0.6");
  const Rational achieved_a = gap_of(Rational(1, 2), c, 20);
  const Rational claimed_a = original_claims(c, 20).first;
  list.add("original_a_fails_c0.6", achieved_a > claimed_a,
           {{"achieved", to_string(achieved_a)}, {"claimed", to_string(claimed_a)}});
  list.add("original_a_agrees_c_le_half",
           original_claims(third, 1).first == bound_part_a(third),
           {{"c", "1/3"}});
}

void beta(Checklist &list, std::uint64_t seed) {
  const auto worked = build_beta_family(
      Instance<Rational>(bernoulli(Rational(1, 2)), Rational(1, 4), 2));
  const auto cert = certify(worked, 41);
  list.add("worked_bernoulli_half",
           cert.passed() && cert.gap_at_zero == Rational(1, 8) &&
               cert.gap_at_one == Rational(1, 16) && cert.gap_at_star == 0,
           {{"D0", to_string(cert.gap_at_zero)},
            {"D1", to_string(cert.gap_at_one)},
            {"Dstar", to_string(cert.gap_at_star)}});

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> horizon(2, 5);
  for (int k = 0; k < 10; ++k) {
    const auto base = random_beta_base(rng, 3, horizon(rng));
    const auto c = certify(build_beta_family(base), 21);
    list.add("random_base_" + std::to_string(k), c.passed(),
             {{"n", base.horizon},
              {"failed_check", c.failed_check},
              {"D0", to_string(c.gap_at_zero)},
              {"D1", to_string(c.gap_at_one)},
              {"Dstar", to_string(c.gap_at_star)}});
  }
}

void oracle(Checklist &list, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> horizon(1, 3);
  int prophet_mismatches = 0;
  int value_mismatches = 0;
  const int instances = 50;
  for (int k = 0; k < instances; ++k) {
    const int n = horizon(rng);
    const auto dist = random_rational_distribution(rng, 4);
    const Instance<Rational> inst(dist, random_rational_cost(rng, 0, 12, 12), n);
    if (compute_prophet(inst) != enumerate_prophet(inst)) ++prophet_mismatches;
    if (compute_value(inst).back() != enumerate_stopping(inst)) ++value_mismatches;
  }
  list.add("prophet_matches_enumeration", prophet_mismatches == 0,
           {{"instances", instances}, {"mismatches", prophet_mismatches}});
  list.add("value_matches_rule_enumeration", value_mismatches == 0,
           {{"instances", instances}, {"mismatches", value_mismatches}});

  const Rational third(1, 3);
  const Instance<Rational> extremal(bernoulli(third), third, 2);
  const auto est = mc_prophet(to_real(extremal), 100000, seed);
  const double exact = Rational(4, 27).get_d();
  list.add("mc_prophet_within_3se", std::abs(est.mean - exact) <= 3.0 * est.std_error,
           {{"estimate", est.mean},
            {"std_error", est.std_error},
            {"exact", exact},
            {"algorithm", est.algorithm}});
}

const std::vector<std::pair<std::string, std::function<void(Checklist &, std::uint64_t)>>> &
suites() {
  static const std::vector<std::pair<std::string, std::function<void(Checklist &, std::uint64_t)>>>
      table{{"sharpness", sharpness},
            {"counterexamples", counterexamples},
            {"beta", beta},
            {"oracle", oracle}};
  return table;
}

}  // namespace

std::vector<std::string> verify_suite_names() {
  std::vector<std::string> names;
  for (const auto &[name, run] : suites()) names.push_back(name);
  return names;
}

json run_verify_suite(const std::string &suite, std::uint64_t seed) {
  for (const auto &[name, run] : suites()) {
    if (name != suite) continue;
    Checklist list;
    run(list, seed);
    return {{"suite", suite},
            {"version", kVersion},
            {"mode", "rational"},
            {"tolerances",
             {{"eps_num", kEpsNum},
              {"search", kSearchTolerance},
              {"beta_real", 1e-10},
              {"mc_sigmas", 3}}},
            {"seed", seed},
            {"checks", list.checks()},
            {"passed", list.first_failure().is_null()},
            {"first_failure", list.first_failure()}};
  }
  throw Error("unknown-suite", suite);
}

}  // namespace prophet_gap
