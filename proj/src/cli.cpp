#include "prophet_gap/cli.hpp"

#include <fstream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "prophet_gap/beta_family.hpp"
#include "prophet_gap/io.hpp"
#include "prophet_gap/oracle.hpp"
#include "prophet_gap/verify.hpp"

namespace prophet_gap {
namespace {

using nlohmann::json;

struct ProblemArgs {
  std::string dist_path;
  std::string cost;
  int horizon = 1;
  bool exact = false;
};

template <Scalar S>
json scalar_json(const S &x) {
  if constexpr (is_exact_v<S>)
    return to_string(x);
  else
    return x;
}

template <Scalar S>
Instance<S> load_instance(const ProblemArgs &args, const DistributionDocument &doc) {
  S cost;
  try {
    cost = parse_scalar<S>(args.cost);
  } catch (const Error &e) {
    throw Error(e.code(), "--cost: '" + args.cost + "'");
  }
  return Instance<S>(build_distribution<S>(doc), std::move(cost), args.horizon);
}

template <Scalar S>
int eval(const ProblemArgs &args, const DistributionDocument &doc, std::ostream &out) {
  const Instance<S> inst = load_instance<S>(args, doc);
  const ValueProfile<S> profile = solve(inst);
  json values = json::array();
  for (const S &v : profile.values) values.push_back(scalar_json(v));
  json thresholds = json::array();
  for (const auto &t : optimal_rule_thresholds(profile))
    thresholds.push_back(t ? scalar_json(*t) : json("-inf"));
  const json report{{"version", kVersion},
                    {"mode", ScalarTraits<S>::mode},
                    {"tolerance", ScalarTraits<S>::eps},
                    {"horizon", inst.horizon},
                    {"cost", scalar_json(inst.cost)},
                    {"values", values},
                    {"prophet", scalar_json(profile.prophet)},
                    {"gap", scalar_json(profile.gap)},
                    {"thresholds", thresholds}};
  out << report.dump(2) << '\n';
  return kExitOk;
}

template <Scalar S>
int beta_sweep(const ProblemArgs &args, const DistributionDocument &doc, int points,
               const std::string &out_path, std::ostream &out, std::ostream &err) {
  const auto family = build_beta_family(load_instance<S>(args, doc));
  const auto cert = certify(family, points);
  if (out_path.empty()) {
    write_beta_csv(out, cert.table);
  } else {
    std::ofstream file(out_path);
    if (!file) throw Error("file-not-writable", out_path);
    write_beta_csv(file, cert.table);
  }
  if (!cert.passed()) {
    err << "check failed: " << cert.failed_check << " at beta = "
        << (cert.offending_beta ? to_string(*cert.offending_beta) : std::string("?")) << '\n';
    return kExitCheckFailed;
  }
  return kExitOk;
}

void add_problem_flags(CLI::App &cmd, ProblemArgs &args) {
  cmd.add_option("--dist", args.dist_path, "distribution JSON file")->required();
  cmd.add_option("--cost", args.cost, "cost per observation (decimal or p/q)")->required();
  cmd.add_option("--n", args.horizon, "horizon")->required()->check(CLI::PositiveNumber);
  cmd.add_flag("--exact", args.exact, "rational arithmetic, fractions printed as p/q");
}

}  // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Prophet/statistician gap engine for [0,1]-valued i.i.d. sequences with cost"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  ProblemArgs eval_args;
  auto *eval_cmd = app.add_subcommand("eval", "solve one instance: v_1..v_n, M, D, thresholds");
  add_problem_flags(*eval_cmd, eval_args);

  int n_max = 10;
  int c_grid = 20;
  std::string bounds_out;
  auto *bounds_cmd = app.add_subcommand("bounds", "tabulate the bounds as CSV");
  bounds_cmd->add_option("--n-max", n_max, "largest horizon")->check(CLI::PositiveNumber);
  bounds_cmd->add_option("--c-grid", c_grid, "number of cost grid points k/K, k = 1..K")
      ->check(CLI::Range(2, 1000000));
  bounds_cmd->add_option("--out", bounds_out, "write CSV here instead of stdout");

  std::string suite;
  std::uint64_t seed = 0;
  auto *verify_cmd = app.add_subcommand("verify", "run a verification suite, JSON report");
  verify_cmd->add_option("--suite", suite, "suite name")
      ->required()
      ->check(CLI::IsMember(verify_suite_names()));
  verify_cmd->add_option("--seed", seed, "seed for randomized checks");

  ProblemArgs beta_args;
  int points = 41;
  std::string beta_out;
  auto *beta_cmd = app.add_subcommand("beta-sweep", "sweep the beta family as CSV");
  add_problem_flags(*beta_cmd, beta_args);
  beta_cmd->add_option("--points", points, "uniform grid points on [0, beta*]")
      ->check(CLI::Range(3, 1000000));
  beta_cmd->add_option("--out", beta_out, "write CSV here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*eval_cmd || *beta_cmd) {
      const ProblemArgs &args = *eval_cmd ? eval_args : beta_args;
      const DistributionDocument doc = load_distribution_file(args.dist_path);
      const bool rational = args.exact || doc.has_strings;
      if (*eval_cmd)
        return rational ? eval<Rational>(args, doc, out) : eval<double>(args, doc, out);
      return rational ? beta_sweep<Rational>(args, doc, points, beta_out, out, err)
                      : beta_sweep<double>(args, doc, points, beta_out, out, err);
    }
    if (*bounds_cmd) {
      if (bounds_out.empty()) {
        write_bounds_csv(out, n_max, c_grid);
      } else {
        std::ofstream file(bounds_out);
        if (!file) throw Error("file-not-writable", bounds_out);
        write_bounds_csv(file, n_max, c_grid);
      }
      return kExitOk;
    }
    const json report = run_verify_suite(suite, seed);
    out << report.dump(2) << '\n';
    if (!report.at("passed").get<bool>()) {
      err << "check failed: " << report.at("first_failure").get<std::string>() << '\n';
      return kExitCheckFailed;
    }
    return kExitOk;
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace prophet_gap
