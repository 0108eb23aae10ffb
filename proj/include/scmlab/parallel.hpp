#pragma once

#include <atomic>
#include <thread>
#include <vector>

namespace scmlab {

inline int default_workers() {
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

/// Runs fn(index, worker) for index in [0, count) across `workers` threads.
/// Indices are claimed from a shared counter; each worker owns its own
/// caches (the worker id is passed through), and callers merge results in
/// index order so output is deterministic regardless of scheduling.
template <typename F>
void parallel_for(std::size_t count, int workers, F&& fn) {
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i, 0);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&, w]() {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= count) break;
        fn(i, w);
      }
    });
  for (auto& t : pool) t.join();
}

}  // namespace scmlab
