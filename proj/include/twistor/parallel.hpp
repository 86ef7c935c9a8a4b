#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace twistor {

// Worker count from TWISTOR_THREADS; 1 when unset or invalid.
inline int worker_count() {
  const char* env = std::getenv("TWISTOR_THREADS");
  if (!env) return 1;
  try {
    int n = std::stoi(env);
    return n >= 1 ? std::min(n, 256) : 1;
  } catch (...) {
    return 1;
  }
}

// Runs job(i) for i in [0, count) on up to `threads` workers.  Each index is
// processed exactly once and results are written by index, so the output order
// never depends on scheduling.  The first exception is rethrown.
template <class R>
std::vector<R> parallel_map(size_t count, int threads, const std::function<R(size_t)>& job) {
  std::vector<R> out(count);
  if (threads <= 1 || count <= 1) {
    for (size_t i = 0; i < count; ++i) out[i] = job(i);
    return out;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr err;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (size_t i = next++; i < count; i = next++) {
      if (failed) return;
      try {
        out[i] = job(i);
      } catch (...) {
        if (!failed.exchange(true)) err = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  int n = std::min<int>(threads, static_cast<int>(count));
  for (int t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
  return out;
}

}  // namespace twistor
