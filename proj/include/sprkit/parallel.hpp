#ifndef SPRKIT_PARALLEL_HPP
#define SPRKIT_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace sprkit {

inline constexpr const char* workers_env_var = "SPRKIT_WORKERS";

/// Worker count from SPRKIT_WORKERS, defaulting to 1.
inline std::size_t default_workers() {
  if (const char* v = std::getenv(workers_env_var)) {
    try {
      const long n = std::stol(v);
      if (n >= 1) return static_cast<std::size_t>(n);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

/// Splits [0, total) into contiguous chunks, runs `fn(begin, end)` on up to
/// `workers` threads and returns the chunk results in input order, so the
/// merged output does not depend on the worker count.
template <class Fn>
auto parallel_chunks(std::uint64_t total, std::size_t workers, Fn fn)
    -> std::vector<decltype(fn(std::uint64_t{}, std::uint64_t{}))> {
  using Result = decltype(fn(std::uint64_t{}, std::uint64_t{}));
  workers = std::max<std::size_t>(1, workers);
  const std::uint64_t chunk_count = std::min<std::uint64_t>(std::max<std::uint64_t>(1, total), workers * 8);
  const std::uint64_t chunk = (total + chunk_count - 1) / std::max<std::uint64_t>(1, chunk_count);
  std::vector<Result> results(chunk_count);
  if (total == 0) {
    results.resize(0);
    return results;
  }

  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto run = [&] {
    while (true) {
      const std::uint64_t c = next.fetch_add(1);
      if (c >= chunk_count) return;
      const std::uint64_t begin = std::min(total, c * chunk);
      const std::uint64_t end = std::min(total, begin + chunk);
      try {
        results[c] = fn(begin, end);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  if (workers == 1) {
    run();
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) threads.emplace_back(run);
    for (auto& t : threads) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

}  // namespace sprkit

#endif  // SPRKIT_PARALLEL_HPP
