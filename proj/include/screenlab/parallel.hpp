#pragma once
#include <cstddef>
#include <functional>

namespace screenlab {

// Worker count: SCREENLAB_THREADS if set and positive, else hardware concurrency.
unsigned worker_count();

// Runs body(i) for i in [0, n) across workers; rethrows the first exception.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body, unsigned workers = 0);

}  // namespace screenlab
