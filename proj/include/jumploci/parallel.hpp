#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace jumploci {

/* Worker cap: JUMPLOCI_THREADS if set and positive, else hardware
   concurrency (at least 1). */
inline unsigned worker_count() {
  if (const char* env = std::getenv("JUMPLOCI_THREADS")) {
    long n = std::strtol(env, nullptr, 10);
    if (n > 0) return static_cast<unsigned>(n);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

/* Runs fn(i) for i in [0, n) across workers.  Results must be written to
   index-addressed slots by the callee; iteration order within a worker is
   ascending, and callers must not depend on cross-worker ordering. */
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  unsigned workers = worker_count();
  if (workers <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> cursor{0};
  auto run = [&] {
    for (;;) {
      std::size_t i = cursor.fetch_add(1);
      if (i >= n) return;
      fn(i);
    }
  };
  std::vector<std::thread> pool;
  unsigned spawn = static_cast<unsigned>(std::min<std::size_t>(workers, n));
  pool.reserve(spawn);
  for (unsigned t = 0; t < spawn; ++t) pool.emplace_back(run);
  for (auto& th : pool) th.join();
}

}  // namespace jumploci
