#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace kmetric {

inline int default_jobs() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Runs fn(i) for i in [begin, end) on up to `jobs` threads. The first exception
/// (by index) is rethrown after all workers join.
template <typename Fn>
void parallel_for(std::int64_t begin, std::int64_t end, int jobs, Fn&& fn) {
  if (end <= begin) return;
  const std::int64_t count = end - begin;
  const int workers = static_cast<int>(std::min<std::int64_t>(std::max(1, jobs), count));
  if (workers == 1) {
    for (std::int64_t i = begin; i < end; ++i) fn(i);
    return;
  }
  std::atomic<std::int64_t> next{begin};
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(count));
  std::vector<std::jthread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::int64_t i = next++; i < end; i = next++) {
        try {
          fn(i);
        } catch (...) {
          errors[static_cast<std::size_t>(i - begin)] = std::current_exception();
        }
      }
    });
  }
  pool.clear();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace kmetric
