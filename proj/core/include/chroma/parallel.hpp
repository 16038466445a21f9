#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace chroma {

/// Number of worker threads a call may use. Results never depend on it.
struct Workers {
  unsigned count = 1;
};

/// Splits [0, total) into contiguous chunks, one per worker, and calls
/// fn(worker, begin, end) for each. The first exception thrown is rethrown.
template <class Fn>
void parallel_chunks(std::size_t total, Workers workers, Fn&& fn) {
  const std::size_t n = std::max<std::size_t>(1, std::min<std::size_t>(workers.count, total));
  if (n == 1) {
    fn(std::size_t{0}, std::size_t{0}, total);
    return;
  }
  std::vector<std::exception_ptr> errors(n);
  {
    std::vector<std::jthread> threads;
    threads.reserve(n);
    for (std::size_t w = 0; w < n; ++w) {
      const std::size_t begin = total * w / n;
      const std::size_t end = total * (w + 1) / n;
      threads.emplace_back([&, w, begin, end] {
        try {
          fn(w, begin, end);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace chroma
