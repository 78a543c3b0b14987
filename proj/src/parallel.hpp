#pragma once

// Static partitioning of an index range over worker threads.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace diffu::detail {

/// DIFFU_THREADS if set to a positive integer, else the hardware concurrency.
inline unsigned worker_count() {
  if (const char* env = std::getenv("DIFFU_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(std::min<long>(v, 256));
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Calls fn(chunk, begin, end) for contiguous chunks of [begin, end), one per
/// worker, in parallel. Chunk k covers indices before chunk k+1.
template <class Fn>
void parallel_chunks(std::uint64_t begin, std::uint64_t end, Fn&& fn, unsigned workers = worker_count()) {
  const std::uint64_t n = end > begin ? end - begin : 0;
  workers = static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(workers, n)));
  if (workers == 1) {
    fn(0u, begin, end);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (unsigned k = 0; k < workers; ++k) {
    const std::uint64_t lo = begin + n * k / workers;
    const std::uint64_t hi = begin + n * (k + 1) / workers;
    threads.emplace_back([&fn, k, lo, hi] { fn(k, lo, hi); });
  }
  for (auto& t : threads) t.join();
}

}  // namespace diffu::detail
