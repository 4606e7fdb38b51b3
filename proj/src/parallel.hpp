#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace spp::internal {

// Runs fn(lo, hi) over [0, total) split into contiguous chunks, using up to
// `jobs` worker threads. With jobs <= 1 the call is inline. The first
// exception thrown by any worker is rethrown on the calling thread.
template <typename Fn>
void run_chunks(std::size_t total, int jobs, std::size_t chunk_size, Fn&& fn) {
  if (total == 0) return;
  if (chunk_size == 0) chunk_size = 1;
  const std::size_t chunks = (total + chunk_size - 1) / chunk_size;
  if (jobs <= 1 || chunks <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) {
      const std::size_t lo = c * chunk_size;
      fn(lo, std::min(total, lo + chunk_size));
    }
    return;
  }

  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_lock;

  auto worker = [&] {
    while (!failed.load(std::memory_order_relaxed)) {
      const std::size_t c = next.fetch_add(1);
      if (c >= chunks) return;
      const std::size_t lo = c * chunk_size;
      try {
        fn(lo, std::min(total, lo + chunk_size));
      } catch (...) {
        std::lock_guard<std::mutex> guard(error_lock);
        if (!error) error = std::current_exception();
        failed.store(true, std::memory_order_relaxed);
        return;
      }
    }
  };

  const int workers = static_cast<int>(std::min<std::size_t>(jobs, chunks));
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace spp::internal
