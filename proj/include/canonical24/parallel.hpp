#pragma once

#include <cstddef>
#include <functional>

namespace canonical24 {

/// Worker count: CANONICAL24_THREADS when set (>= 1), else the hardware concurrency.
unsigned worker_count();

/// Runs fn(i) for i in [0, n) on up to worker_count() threads. Callers write
/// results into per-index slots so the outcome does not depend on scheduling.
/// The first exception thrown by any task is rethrown after all workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace canonical24
