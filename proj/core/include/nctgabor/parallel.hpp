#pragma once

#include <cstddef>
#include <functional>

namespace nct {

// Worker cap: min(hardware_concurrency, NCT_GABOR_THREADS if set). At least 1.
int max_threads();

// Runs fn(i) for i in [0, n). Work is split into contiguous chunks, one per
// worker; every index is processed exactly once, so writing to per-index
// slots is race-free and the result is independent of the thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace nct
