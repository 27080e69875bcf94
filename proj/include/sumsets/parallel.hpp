// parallel.hpp
// Minimal parallel-for over index ranges. All module operations are pure,
// so partitioning scans across threads with an associative reduce is safe.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace sumsets {

// Process-wide thread budget, settable from the CLI (--threads).
void set_thread_budget(unsigned n);
unsigned thread_budget();

// Calls fn(begin, end) on disjoint chunks of [0, n), possibly concurrently.
void parallel_for(std::int64_t n,
                  const std::function<void(std::int64_t, std::int64_t)>& fn);

}  // namespace sumsets
