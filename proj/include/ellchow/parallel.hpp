#pragma once

#include <cstddef>
#include <functional>

namespace ellchow {

// Worker count for fan-out over independent computations; the ELLCHOW_THREADS
// environment variable overrides hardware concurrency.
std::size_t worker_count();

// Runs fn(0..count-1) across workers; all values are independent and results
// must be written to disjoint slots. Rethrows the first exception.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace ellchow
