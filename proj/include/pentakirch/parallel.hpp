#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace pentakirch {

/// Worker count: PENTAKIRCH_THREADS when set to a positive integer,
/// otherwise the number of available processors.
inline unsigned thread_count() {
  if (const char* env = std::getenv("PENTAKIRCH_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Applies f to every item on up to thread_count() workers. Results keep the
/// input order; the first exception thrown by any task is rethrown.
template <typename T, typename F>
auto parallel_map(const std::vector<T>& items, F f) -> std::vector<decltype(f(items.front()))> {
  using R = decltype(f(items.front()));
  std::vector<R> results(items.size());
  const unsigned workers = std::min<unsigned>(thread_count(), static_cast<unsigned>(items.size()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < items.size(); ++i) results[i] = f(items[i]);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < items.size(); i = next++) {
        try {
          results[i] = f(items[i]);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return results;
}

}  // namespace pentakirch
