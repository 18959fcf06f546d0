#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace nacoh {

inline std::size_t resolve_threads(std::size_t requested) {
  if (requested != 0) return requested;
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

// Splits [0, count) into contiguous chunks, one per worker, and calls
// body(begin, end, worker). Chunk boundaries depend only on count and the
// worker count, so per-index results are reproducible; callers merge
// per-worker partials in worker order. The first exception is rethrown.
template <typename Body>
void parallel_chunks(std::size_t count, std::size_t threads, Body&& body) {
  const std::size_t workers = std::max<std::size_t>(1, std::min(resolve_threads(threads), count));
  if (workers == 1) {
    body(std::size_t{0}, count, std::size_t{0});
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = count * w / workers;
    const std::size_t end = count * (w + 1) / workers;
    pool.emplace_back([&, begin, end, w] {
      try {
        body(begin, end, w);
      } catch (...) {
        const std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace nacoh
