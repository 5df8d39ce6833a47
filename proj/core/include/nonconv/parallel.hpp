#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace nonconv {

// Runs fn(r) for r = 0..count-1 on up to `threads` workers. Each call writes
// into its own output slot, so results are identical for any thread count;
// callers reduce the slots in index order afterwards.
template <typename Fn>
void parallel_replicas(std::size_t count, unsigned threads, Fn&& fn) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t r = 0; r < count; ++r) fn(r);
    return;
  }
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(threads, count));
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&fn, w, workers, count] {
      for (std::size_t r = w; r < count; r += workers) fn(r);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace nonconv
