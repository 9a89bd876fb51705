#pragma once

#include <stdexcept>
#include <string>

namespace prophet_gap {

// Every failure carries a stable kebab-case code ("weights-not-normalized",
// "state-space-too-large", ...) so callers and the CLI can name it.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string &detail)
      : std::runtime_error(code + ": " + detail), code_(std::move(code)), detail_(detail) {}
  explicit Error(std::string code)
      : std::runtime_error(code), code_(std::move(code)) {}

  const std::string &code() const noexcept { return code_; }
  const std::string &detail() const noexcept { return detail_; }

 private:
  std::string code_;
  std::string detail_;
};

}  // namespace prophet_gap
