#pragma once

#include <algorithm>
#include <thread>
#include <vector>

namespace ttpk {

// Runs body(i) for i in [0, n) on up to `threads` workers (0 = hardware
// concurrency). Work is split into contiguous chunks; body must only write
// to per-index state.
template <class Body>
void parallel_for(int n, int threads, Body&& body) {
  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, std::max(1, n));
  if (threads == 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::jthread> workers;
  workers.reserve(threads);
  for (int w = 0; w < threads; ++w) {
    const int begin = static_cast<int>(static_cast<long long>(n) * w / threads);
    const int end = static_cast<int>(static_cast<long long>(n) * (w + 1) / threads);
    workers.emplace_back([&body, begin, end] {
      for (int i = begin; i < end; ++i) body(i);
    });
  }
}

}  // namespace ttpk
