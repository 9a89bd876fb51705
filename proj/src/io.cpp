#include "prophet_gap/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "prophet_gap/bounds.hpp"

namespace prophet_gap {
namespace {

std::vector<std::string> read_entries(const nlohmann::json &doc, const char *field,
                                      const std::string &source, bool &has_strings) {
  if (!doc.contains(field))
    throw Error("missing-field", source + ": no '" + field + "' array");
  const auto &array = doc.at(field);
  if (!array.is_array()) throw Error("invalid-field", source + ": '" + field + "' is not an array");
  std::vector<std::string> out;
  for (std::size_t j = 0; j < array.size(); ++j) {
    const auto &entry = array[j];
    if (entry.is_string()) {
      has_strings = true;
      out.push_back(entry.get<std::string>());
    } else if (entry.is_number()) {
      out.push_back(to_string(entry.get<double>()));
    } else {
      throw Error("invalid-number", source + ": " + field + "[" + std::to_string(j) +
                                        "] is neither a number nor a string");
    }
  }
  return out;
}

}  // namespace

DistributionDocument parse_distribution_json(std::string_view text, std::string source) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw Error("parse-error", source + ": " + e.what());
  }
  if (!doc.is_object()) throw Error("parse-error", source + ": expected a JSON object");
  DistributionDocument out;
  out.source = std::move(source);
  out.atoms = read_entries(doc, "atoms", out.source, out.has_strings);
  out.weights = read_entries(doc, "weights", out.source, out.has_strings);
  return out;
}

DistributionDocument load_distribution_file(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw Error("file-not-readable", path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_distribution_json(buffer.str(), path.string());
}

void write_bounds_csv(std::ostream &out, int n_max, int c_grid) {
  if (n_max < 1) throw Error("horizon-too-small", "n-max must be >= 1");
  if (c_grid < 2) throw Error("grid-too-small", "c-grid must be >= 2");
  const std::string e_inv = to_string(bound_part_c<double>());
  out << "kind,n,c,bound,original_claim,e_inv\n";
  for (int n = 1; n <= n_max; ++n) {
    const auto [claimed_a, claimed_b] = original_claims<double>(1.0, n);
    out << "part_b," << n << ",," << to_string(bound_part_b<double>(n)) << ','
        << to_string(claimed_b) << ',' << e_inv << '\n';
  }
  for (int k = 1; k <= c_grid; ++k) {
    const double c = static_cast<double>(k) / c_grid;
    const auto [claimed_a, claimed_b] = original_claims<double>(c, 1);
    out << "part_a,," << to_string(c) << ',' << to_string(bound_part_a<double>(c)) << ','
        << to_string(claimed_a) << ',' << e_inv << '\n';
  }
  out << "part_c,,," << e_inv << ",," << e_inv << '\n';
}

}  // namespace prophet_gap
