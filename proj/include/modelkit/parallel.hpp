#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace modelkit {

/* Runs fn(0..chunks-1) on up to `jobs` worker threads. Callers own any
 * per-chunk output slots, so results merge deterministically regardless of
 * scheduling. jobs <= 1 runs inline. */
inline void parallel_chunks(int jobs, int chunks, const std::function<void(int)>& fn) {
  if (jobs > chunks) jobs = chunks;
  if (jobs <= 1) {
    for (int c = 0; c < chunks; ++c) fn(c);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr first_error;
  std::mutex err_mx;
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (int t = 0; t < jobs; ++t)
    pool.emplace_back([&] {
      for (int c; (c = next.fetch_add(1)) < chunks;) {
        try {
          fn(c);
        } catch (...) {
          std::lock_guard<std::mutex> lock(err_mx);
          if (!first_error) first_error = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace modelkit
