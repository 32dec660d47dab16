// Minimal task parallelism. Tasks write to preallocated slots indexed by the
// task id, so aggregation order never depends on scheduling. Nested calls run
// serially to bound the total thread count by a single pool budget.
#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace seqmed {

inline int& global_thread_budget() {
  static int budget = static_cast<int>(std::thread::hardware_concurrency());
  return budget;
}

inline void set_thread_budget(int n) { global_thread_budget() = n < 1 ? 1 : n; }

namespace detail {
inline bool& in_parallel_region() {
  thread_local bool flag = false;
  return flag;
}
}  // namespace detail

inline void parallel_for(int n_tasks, const std::function<void(int)>& fn) {
  if (n_tasks <= 0) return;
  int n_threads = global_thread_budget();
  if (n_threads > n_tasks) n_threads = n_tasks;
  if (n_threads <= 1 || detail::in_parallel_region()) {
    for (int i = 0; i < n_tasks; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto worker = [&]() {
    detail::in_parallel_region() = true;
    for (;;) {
      int i = next.fetch_add(1);
      if (i >= n_tasks) break;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
      }
    }
    detail::in_parallel_region() = false;
  };
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(n_threads));
  for (int t = 0; t < n_threads; ++t) threads.emplace_back(worker);
  for (auto& th : threads) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace seqmed
