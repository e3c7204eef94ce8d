#pragma once

#include <atomic>
#include <thread>
#include <vector>

namespace goldbach {

// Runs fn(i) for i in [0, n) on up to `jobs` threads. Each index writes only
// its own output slot, and callers reduce the slots serially afterwards, so
// results are bit-identical regardless of thread count.
template <class Fn>
void parallel_for_index(long n, int jobs, Fn&& fn) {
  if (jobs <= 1 || n < 4) {
    for (long i = 0; i < n; ++i) fn(i);
    return;
  }
  int workers = std::min<long>(jobs, n);
  std::atomic<long> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int t = 0; t < workers; ++t)
    pool.emplace_back([&] {
      for (;;) {
        long i = next.fetch_add(1);
        if (i >= n) return;
        fn(i);
      }
    });
  for (auto& th : pool) th.join();
}

inline int default_jobs() {
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

}  // namespace goldbach
