#include "kpde/util.hpp"

#include <algorithm>
#include <thread>
#include <vector>

namespace kpde {

void parallel_lines(int count, int nthreads, const std::function<void(int, int)>& fn) {
  if (nthreads <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) fn(i, 0);
    return;
  }
  const int nt = std::min(nthreads, count);
  std::vector<std::thread> pool;
  pool.reserve(nt);
  for (int tid = 0; tid < nt; ++tid) {
    const int lo = (int)((long long)count * tid / nt);
    const int hi = (int)((long long)count * (tid + 1) / nt);
    pool.emplace_back([lo, hi, tid, &fn] {
      for (int i = lo; i < hi; ++i) fn(i, tid);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace kpde
