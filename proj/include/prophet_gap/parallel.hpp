#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace prophet_gap {

/// Worker count: PROPHET_GAP_THREADS when set and positive, otherwise the
/// hardware concurrency (0 means auto).
std::size_t worker_count();

/// Runs body(i) for i in [0, count) on up to worker_count() threads.
/// Indices are split into contiguous blocks; callers write results by index,
/// so the outcome does not depend on scheduling. The first exception thrown
/// by any worker is rethrown on the calling thread.
template <class Body>
void parallel_for(std::size_t count, Body &&body) {
  const std::size_t workers = std::min(worker_count(), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = count * w / workers;
    const std::size_t end = count * (w + 1) / workers;
    threads.emplace_back([&, begin, end] {
      try {
        for (std::size_t i = begin; i < end; ++i) body(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto &t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace prophet_gap
