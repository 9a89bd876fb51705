#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "prophet_gap/beta_family.hpp"
#include "prophet_gap/distribution.hpp"

namespace prophet_gap {

/// Raw contents of a distribution document:
///   {"atoms": [0, "1/3", 1], "weights": ["1/2", "1/4", "1/4"]}
/// Numbers keep their shortest round-trip decimal text; any string entry
/// forces rational mode.
struct DistributionDocument {
  std::vector<std::string> atoms;
  std::vector<std::string> weights;
  bool has_strings = false;
  std::string source;
};

DistributionDocument parse_distribution_json(std::string_view text,
                                             std::string source = "<input>");
DistributionDocument load_distribution_file(const std::filesystem::path &path);

/// Parses every entry in the chosen mode and validates the law. Errors keep
/// their code and name the offending field, e.g. "weights[2]".
template <Scalar S>
FiniteDistribution<S> build_distribution(const DistributionDocument &doc) {
  const auto parse_all = [&](const std::vector<std::string> &texts, const char *field) {
    std::vector<S> out;
    out.reserve(texts.size());
    for (std::size_t j = 0; j < texts.size(); ++j) {
      try {
        out.push_back(parse_scalar<S>(texts[j]));
      } catch (const Error &e) {
        throw Error(e.code(), doc.source + ": " + field + "[" + std::to_string(j) + "]: '" +
                                  texts[j] + "'");
      }
    }
    return out;
  };
  std::vector<S> atoms = parse_all(doc.atoms, "atoms");
  std::vector<S> weights = parse_all(doc.weights, "weights");
  if (atoms.size() != weights.size())
    throw Error("length-mismatch", doc.source + ": " + std::to_string(atoms.size()) +
                                       " atoms but " + std::to_string(weights.size()) + " weights");
  try {
    return FiniteDistribution<S>(std::move(atoms), std::move(weights));
  } catch (const Error &e) {
    throw Error(e.code(), doc.source + ": " + e.detail());
  }
}

/// CSV with header `beta,cost,V,M,D`.
template <Scalar S>
void write_beta_csv(std::ostream &out, const std::vector<BetaRow<S>> &rows) {
  out << "beta,cost,V,M,D\n";
  for (const auto &row : rows)
    out << to_string(row.beta) << ',' << to_string(row.cost) << ',' << to_string(row.value) << ','
        << to_string(row.prophet) << ',' << to_string(row.gap) << '\n';
}

/// CSV `kind,n,c,bound,original_claim,e_inv`: part_b rows for n = 1..n_max,
/// part_a rows on the grid c = k/c_grid (k = 1..c_grid), and one part_c row.
void write_bounds_csv(std::ostream &out, int n_max, int c_grid);

}  // namespace prophet_gap
