#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace swm::detail {

inline std::size_t resolve_threads(std::size_t requested) {
  if (requested == 0) {
    requested = std::max(1u, std::thread::hardware_concurrency());
  }
  return requested;
}

// Splits [begin, end) into at most `threads` contiguous chunks and runs
// fn(chunk_begin, chunk_end) on each. Chunks shorter than `min_chunk` are
// merged so tiny ranges stay on the calling thread.
template <class Fn>
void parallel_for(std::size_t begin, std::size_t end, std::size_t threads,
                  std::size_t min_chunk, Fn&& fn) {
  if (end <= begin) {
    return;
  }
  const std::size_t count = end - begin;
  std::size_t workers = std::min(threads, std::max<std::size_t>(1, count / min_chunk));
  if (workers <= 1) {
    fn(begin, end);
    return;
  }
  const std::size_t chunk = (count + workers - 1) / workers;
  std::vector<std::jthread> pool;
  pool.reserve(workers - 1);
  for (std::size_t w = 1; w < workers; ++w) {
    const std::size_t lo = begin + w * chunk;
    const std::size_t hi = std::min(end, lo + chunk);
    if (lo < hi) {
      pool.emplace_back([&fn, lo, hi] { fn(lo, hi); });
    }
  }
  fn(begin, std::min(end, begin + chunk));
}

}  // namespace swm::detail
