#pragma once

#include <cstddef>
#include <functional>

namespace wqmc {

// Runs fn(i) for i in [0, count) on up to `threads` workers with static
// partitioning. fn must only touch state owned by index i, so results are
// identical for every thread count; reductions stay with the caller and run
// sequentially over the filled slots. The first exception thrown by any
// worker is rethrown after all workers join.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn);

} // namespace wqmc
