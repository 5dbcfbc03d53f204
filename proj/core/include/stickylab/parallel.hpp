#pragma once

#include <cstddef>
#include <functional>

namespace stickylab {

// Worker count: STICKYLAB_THREADS if set and positive, else hardware concurrency.
unsigned worker_count();

// Runs body(i) for i in [0, count). Each index is visited exactly once; callers
// write results into per-index slots so the reduction order stays deterministic.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace stickylab
