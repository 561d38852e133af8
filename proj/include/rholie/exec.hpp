#pragma once

#include <atomic>
#include <cstddef>
#include <optional>
#include <thread>
#include <vector>

namespace rholie {

/// Fan-out policy for the heavy exhaustive scans.  threads == 1 keeps the scan
/// on the calling thread.
struct Exec {
  int threads = 1;
};

/// Runs f(idx) for idx in [0, count) and returns the smallest index at which
/// f produced a value, together with that value.  Work is split into
/// contiguous chunks, so the merged result is the lexicographic minimum no
/// matter the thread count; an atomic bound lets late chunks stop early.
template <class W, class F>
std::optional<std::pair<size_t, W>> first_hit(size_t count, int threads, F&& f) {
  if (threads <= 1 || count < 64) {
    for (size_t i = 0; i < count; ++i)
      if (auto w = f(i)) return std::make_pair(i, std::move(*w));
    return std::nullopt;
  }
  int n = threads;
  if (static_cast<size_t>(n) > count) n = static_cast<int>(count);
  std::atomic<size_t> best{count};
  std::vector<std::optional<std::pair<size_t, W>>> hits(n);
  std::vector<std::thread> pool;
  const size_t chunk = (count + n - 1) / n;
  for (int t = 0; t < n; ++t) {
    pool.emplace_back([&, t] {
      const size_t lo = t * chunk;
      const size_t hi = std::min(count, lo + chunk);
      for (size_t i = lo; i < hi; ++i) {
        if (i >= best.load(std::memory_order_relaxed)) break;
        if (auto w = f(i)) {
          hits[t] = std::make_pair(i, std::move(*w));
          size_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {}
          break;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  std::optional<std::pair<size_t, W>> out;
  for (auto& h : hits)
    if (h && (!out || h->first < out->first)) out = std::move(h);
  return out;
}

}  // namespace rholie
