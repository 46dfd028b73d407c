#pragma once

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace gt {

/// Zero or negative asks for one thread per core.
inline int resolve_workers(int workers) {
  if (workers > 0) return workers;
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

/// Runs fn(i) for i in [0, count) across up to `workers` threads and
/// returns the results in index order. The worker count changes scheduling
/// only, never the result, so downstream output stays byte-stable.
template <class R, class F>
std::vector<R> parallel_map(int count, int workers, F&& fn) {
  std::vector<R> results(count);
  if (count <= 0) return results;
  workers = std::max(1, std::min(workers, count));
  if (workers == 1) {
    for (int i = 0; i < count; ++i) results[i] = fn(i);
    return results;
  }
  std::atomic<int> cursor{0};
  std::atomic<bool> bail{false};
  std::exception_ptr first_error;
  std::mutex err_mu;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      while (!bail.load(std::memory_order_relaxed)) {
        int i = cursor.fetch_add(1, std::memory_order_relaxed);
        if (i >= count) break;
        try {
          results[i] = fn(i);
        } catch (...) {
          {
            std::lock_guard<std::mutex> lock(err_mu);
            if (!first_error) first_error = std::current_exception();
          }
          bail.store(true, std::memory_order_relaxed);
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
  return results;
}

}  // namespace gt
