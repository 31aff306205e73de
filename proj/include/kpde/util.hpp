#pragma once
#include <functional>

namespace kpde {

// run fn(i, tid) for i in [0, count) over nthreads contiguous blocks.
// deterministic partition; callers keep per-tid scratch and disjoint writes
void parallel_lines(int count, int nthreads, const std::function<void(int, int)>& fn);

}  // namespace kpde
