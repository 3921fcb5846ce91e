// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

#include "wigner/grid.hpp"

namespace wigner {

// Number of worker threads to use.  WIGNER_LAB_THREADS caps parallelism;
// 0 or unset means one thread per hardware core.
inline int thread_budget() {
  long cap = 0;
  if (const char* env = std::getenv("WIGNER_LAB_THREADS")) {
    char* end = nullptr;
    cap = std::strtol(env, &end, 10);
    if (end == env || cap < 0) cap = 0;
  }
  long hw = static_cast<long>(std::thread::hardware_concurrency());
  if (hw <= 0) hw = 1;
  if (cap == 0) return static_cast<int>(std::min(hw, 64L));
  return static_cast<int>(std::min(cap, hw));
}

// Runs fn(i) for i in [0, n).  Work is split into contiguous blocks, one per
// thread; every index is processed exactly once, so results are reproducible
// as long as fn writes only to index-i slots.
template <class Fn>
void parallel_for(Index n, Fn&& fn, int threads = 0) {
  if (threads <= 0) threads = thread_budget();
  threads = static_cast<int>(std::min<Index>(threads, std::max<Index>(n, 1)));
  if (threads <= 1) {
    for (Index i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  const Index chunk = (n + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    const Index begin = Index(t) * chunk;
    const Index end = std::min(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([begin, end, &fn] {
      for (Index i = begin; i < end; ++i) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace wigner
