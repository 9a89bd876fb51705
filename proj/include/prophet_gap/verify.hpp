#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace prophet_gap {

inline constexpr const char *kVersion = "0.1.0";

/// Suites: "sharpness", "counterexamples", "beta", "oracle".
std::vector<std::string> verify_suite_names();

/// Runs one suite. The report carries `suite`, `version`, `mode`,
/// `tolerances`, `seed`, one entry per check under `checks`, `passed`, and
/// `first_failure` (null when everything passed). Throws unknown-suite.
nlohmann::json run_verify_suite(const std::string &suite, std::uint64_t seed = 0);

}  // namespace prophet_gap
