#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace sfqm::detail {

// Static chunked parallel loop: index range [0, n) split into at most `jobs`
// contiguous blocks. fn must not throw (workers have nowhere to send the
// exception); callers store results by index so the schedule cannot affect
// output. jobs <= 0 means hardware concurrency; jobs == 1 runs inline.
template <typename Fn>
void parallel_for(std::size_t n, int jobs, Fn&& fn) {
  if (jobs <= 0) {
    unsigned hc = std::thread::hardware_concurrency();
    jobs = hc ? static_cast<int>(hc) : 1;
  }
  std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::size_t chunk = (n + workers - 1) / workers;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    std::size_t begin = w * chunk;
    std::size_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([begin, end, &fn] {
      for (std::size_t i = begin; i < end; ++i) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace sfqm::detail
