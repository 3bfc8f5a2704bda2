#pragma once

// Deterministic parallel map: work items are computed into a pre-sized
// vector by index, so the result is identical for any thread count.

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace geoledger {

inline int default_thread_count() {
  if (const char* env = std::getenv("GEOLEDGER_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  return 1;
}

template <typename T, typename Fn>
std::vector<T> parallel_map(std::size_t count, Fn&& fn, int threads) {
  std::vector<T> out(count);
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) break;
      out[i] = fn(i);
    }
  };
  std::vector<std::thread> pool;
  int nthreads = std::min<std::size_t>(threads, count);
  pool.reserve(nthreads);
  for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace geoledger
