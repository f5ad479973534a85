#pragma once

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace cliquecomm::detail {

// Runs fn(0..count-1) on a small thread pool; callers write results by index.
template <class Fn>
void parallel_for(int count, Fn&& fn) {
  const int workers = std::max(1, std::min<int>(count, static_cast<int>(std::thread::hardware_concurrency())));
  std::atomic<int> next{0};
  auto body = [&] {
    for (int i = next++; i < count; i = next++) fn(i);
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(body);
  body();
  for (auto& th : pool) th.join();
}

}  // namespace cliquecomm::detail
