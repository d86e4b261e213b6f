#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace tricensus {

/// Runs fn(worker_id) on `workers` threads (inline when workers <= 1).
/// Callers own determinism: merged results must not depend on schedule.
template <typename Fn>
void run_workers(unsigned workers, Fn&& fn) {
  if (workers <= 1) {
    fn(0u);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back([&fn, w] { fn(w); });
  for (auto& t : pool) t.join();
}

/// Dynamic index feed shared by workers.
class IndexFeed {
 public:
  explicit IndexFeed(std::size_t end) : end_(end) {}
  /// Returns end() when exhausted.
  std::size_t next() { return next_.fetch_add(1, std::memory_order_relaxed); }
  std::size_t end() const { return end_; }

 private:
  std::atomic<std::size_t> next_{0};
  std::size_t end_;
};

unsigned default_thread_count();

}  // namespace tricensus
