#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace grcodes {

/// Number of worker threads to use for a requested count (0 = hardware).
inline unsigned resolve_threads(unsigned requested) {
  if (requested)
    return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

/// Runs job(i) for every i in [0, count); callers store results by index so
/// the outcome does not depend on scheduling.
template <class Job> void parallel_for(std::size_t count, unsigned threads, Job job) {
  const std::size_t workers = std::min<std::size_t>(resolve_threads(threads), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i)
      job(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;)
        job(i);
    });
  for (auto &th : pool)
    th.join();
}

} // namespace grcodes
