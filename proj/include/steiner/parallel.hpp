#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <optional>
#include <thread>
#include <vector>

namespace steiner::detail {

/// Smallest index in [0, count) for which `fails(index)` is true, or empty.
///
/// The range is cut into contiguous chunks scanned by worker threads; each
/// worker stops once it passes the best failure found so far. The answer is
/// the global minimum, independent of scheduling. `make_state` builds one
/// private state object per worker (for memo tables); `fails` receives it.
template <typename MakeState, typename Fails>
std::optional<std::size_t> first_failure(std::size_t count, MakeState make_state, Fails fails,
                                         std::size_t min_per_thread = 1 << 14) {
  std::size_t workers = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  workers = std::min(workers, std::max<std::size_t>(1, count / min_per_thread));

  if (workers == 1) {
    auto state = make_state();
    for (std::size_t i = 0; i < count; ++i)
      if (fails(state, i)) return i;
    return std::nullopt;
  }

  std::atomic<std::size_t> best{count};
  const std::size_t chunk = (count + workers - 1) / workers;
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t lo = w * chunk;
    const std::size_t hi = std::min(count, lo + chunk);
    pool.emplace_back([&, lo, hi] {
      auto state = make_state();
      for (std::size_t i = lo; i < hi; ++i) {
        if ((i & 1023) == 0 && best.load(std::memory_order_relaxed) < lo) return;
        if (fails(state, i)) {
          std::size_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
          return;
        }
      }
    });
  }
  pool.clear();
  std::size_t result = best.load();
  if (result == count) return std::nullopt;
  return result;
}

struct NoState {};

template <typename Fails>
std::optional<std::size_t> first_failure(std::size_t count, Fails fails) {
  return first_failure(count, [] { return NoState{}; },
                       [&](NoState&, std::size_t i) { return fails(i); });
}

}  // namespace steiner::detail
