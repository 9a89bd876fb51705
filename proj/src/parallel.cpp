#include "prophet_gap/parallel.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace prophet_gap {

std::size_t worker_count() {
  if (const char *env = std::getenv("PROPHET_GAP_THREADS")) {
    try {
      const long requested = std::stol(env);
      if (requested > 0) return static_cast<std::size_t>(requested);
    } catch (const std::exception &) {
      // unparsable: fall through to auto
    }
  }
  const unsigned hardware = std::thread::hardware_concurrency();
  return hardware == 0 ? 1 : hardware;
}

}  // namespace prophet_gap
