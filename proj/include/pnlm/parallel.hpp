#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace pnlm {

/// Number of workers actually used for a request of `threads`
/// (0 means "use the hardware count").
inline int resolve_threads(int threads) {
  if (threads > 0) return threads;
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

/// Runs fn(begin..end) partitioned into contiguous index blocks, one block per
/// worker. fn is fn(std::int64_t first, std::int64_t last, int worker).
/// Block boundaries depend only on (end-begin, workers), so any value computed
/// per index is independent of scheduling. Exceptions propagate to the caller.
template <class Fn>
void parallel_blocks(std::int64_t begin, std::int64_t end, int threads, Fn&& fn) {
  const std::int64_t n = end - begin;
  if (n <= 0) return;
  const int workers = std::min<std::int64_t>(resolve_threads(threads), n);
  if (workers <= 1) {
    fn(begin, end, 0);
    return;
  }
  const std::int64_t chunk = (n + workers - 1) / workers;
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  pool.reserve(workers - 1);
  for (int w = 1; w < workers; ++w) {
    const std::int64_t lo = begin + w * chunk;
    const std::int64_t hi = std::min(end, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&fn, &errors, lo, hi, w] {
      try {
        fn(lo, hi, w);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  try {
    fn(begin, std::min(end, begin + chunk), 0);
  } catch (...) {
    errors[0] = std::current_exception();
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

/// parallel_blocks over single indices: fn(std::int64_t i, int worker).
template <class Fn>
void parallel_for(std::int64_t begin, std::int64_t end, int threads, Fn&& fn) {
  parallel_blocks(begin, end, threads, [&fn](std::int64_t lo, std::int64_t hi, int w) {
    for (std::int64_t i = lo; i < hi; ++i) fn(i, w);
  });
}

}  // namespace pnlm
