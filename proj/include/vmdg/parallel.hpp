#pragma once

#include <functional>
#include <thread>
#include <vector>

namespace vmdg {

inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Static-partition parallel loop over [0, n). Each index is processed by
/// exactly one worker, so per-element writes stay deterministic regardless
/// of the thread count.
inline void parallel_for(int n, int n_threads,
                         const std::function<void(int, int)>& body) {
  n_threads = resolve_threads(n_threads);
  if (n_threads <= 1 || n < 2 * n_threads) {
    body(0, n);
    return;
  }
  std::vector<std::thread> workers;
  workers.reserve(static_cast<size_t>(n_threads));
  const int chunk = (n + n_threads - 1) / n_threads;
  for (int t = 0; t < n_threads; ++t) {
    const int begin = t * chunk;
    const int end = std::min(n, begin + chunk);
    if (begin >= end) break;
    workers.emplace_back([&body, begin, end] { body(begin, end); });
  }
  for (auto& w : workers) w.join();
}

}  // namespace vmdg
