#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace msn {

/// Splits [0, n) into at most `threads` contiguous chunks and runs
/// fn(begin, end) on each, one std::thread per chunk. The first exception
/// thrown by any chunk is rethrown after all chunks finish.
template <typename Fn>
void parallel_chunks(std::size_t n, unsigned threads, Fn&& fn) {
  threads = std::max(1u, threads);
  const std::size_t chunks = std::min<std::size_t>(threads, std::max<std::size_t>(n, 1));
  if (chunks <= 1) {
    fn(std::size_t{0}, n);
    return;
  }
  std::vector<std::exception_ptr> errors(chunks);
  std::vector<std::thread> workers;
  workers.reserve(chunks);
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t begin = n * c / chunks;
    const std::size_t end = n * (c + 1) / chunks;
    workers.emplace_back([&, c, begin, end] {
      try {
        fn(begin, end);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    });
  }
  for (auto& w : workers) {
    w.join();
  }
  for (auto& e : errors) {
    if (e) {
      std::rethrow_exception(e);
    }
  }
}

}  // namespace msn
