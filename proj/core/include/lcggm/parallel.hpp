#pragma once

#include <cstddef>
#include <functional>

namespace lcggm {

// Hardware concurrency, at least 1.
int default_thread_budget();

// Runs body(i) for i in [0, count) on up to `threads` workers. Indices are
// dealt out round-robin, so results written to preallocated per-index slots
// are identical for every thread budget. The first exception thrown by any
// worker is rethrown on the calling thread after all workers join.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& body);

}  // namespace lcggm
