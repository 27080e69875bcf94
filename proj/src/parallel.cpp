#include "sumsets/parallel.hpp"

#include <atomic>

namespace sumsets {

namespace {
std::atomic<unsigned> g_threads{0};  // 0 = auto
}

void set_thread_budget(unsigned n) { g_threads.store(n); }

unsigned thread_budget() {
  unsigned n = g_threads.load();
  if (n == 0) {
    n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
  }
  return n;
}

void parallel_for(std::int64_t n,
                  const std::function<void(std::int64_t, std::int64_t)>& fn) {
  if (n <= 0) return;
  unsigned workers = thread_budget();
  if (workers <= 1 || n < 1024) {
    fn(0, n);
    return;
  }
  workers = std::min<std::int64_t>(workers, n);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::int64_t chunk = (n + workers - 1) / workers;
  for (unsigned t = 0; t < workers; ++t) {
    std::int64_t b = t * chunk;
    std::int64_t e = std::min<std::int64_t>(n, b + chunk);
    if (b >= e) break;
    pool.emplace_back([&fn, b, e] { fn(b, e); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace sumsets
