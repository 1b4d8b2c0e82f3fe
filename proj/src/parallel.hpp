#ifndef STABLEAGG_SRC_PARALLEL_HPP
#define STABLEAGG_SRC_PARALLEL_HPP

#include <cstddef>
#include <cstdlib>
#include <thread>
#include <vector>

namespace stableagg::detail {

/// Worker count for embarrassingly parallel loops, capped by the
/// STABLE_AGG_THREADS environment variable when set.
inline std::size_t effective_threads() {
  std::size_t n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* env = std::getenv("STABLE_AGG_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1) n = static_cast<std::size_t>(v);
  }
  return n < 1 ? 1 : n;
}

/// Runs body(i) for i in [0, n). Work is split into fixed contiguous blocks,
/// so results written to per-index slots are identical for any thread count.
template <typename Body>
void parallel_for(std::size_t n, Body&& body) {
  const std::size_t threads = std::min(effective_threads(), n == 0 ? 1 : n);
  if (threads <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  const std::size_t chunk = (n + threads - 1) / threads;
  for (std::size_t t = 0; t < threads; ++t) {
    const std::size_t lo = t * chunk;
    const std::size_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&body, lo, hi] {
      for (std::size_t i = lo; i < hi; ++i) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace stableagg::detail

#endif  // STABLEAGG_SRC_PARALLEL_HPP
