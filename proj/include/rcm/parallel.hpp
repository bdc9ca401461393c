#pragma once

#include <functional>
#include <thread>
#include <vector>

namespace rcm {

/// Run fn(i) for i in [0, count); jobs <= 0 means hardware concurrency.
/// Work items must be independent (everything here is pure).
inline void parallel_for(long count, int jobs, const std::function<void(long)>& fn) {
  if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;
  if (jobs == 1 || count <= 1) {
    for (long i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<long> next{0};
  for (int t = 0; t < jobs && t < count; ++t) {
    pool.emplace_back([&] {
      while (true) {
        long i = next.fetch_add(1);
        if (i >= count) break;
        fn(i);
      }
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace rcm
