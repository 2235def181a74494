#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace latticeturb {

/// Number of workers to use when the caller asks for 0 ("auto").
inline std::size_t resolve_threads(std::size_t requested) noexcept {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Evaluates fn(i) for i in [0, count) on up to `threads` workers and
/// returns the results in index order. Work is split into contiguous
/// blocks, so any reduction the caller performs over the returned vector
/// is independent of scheduling. The first exception thrown is rethrown.
template <class Fn>
auto parallel_map(std::size_t count, std::size_t threads, Fn&& fn)
    -> std::vector<decltype(fn(std::size_t{}))> {
  using Result = decltype(fn(std::size_t{}));
  std::vector<Result> results(count);
  const std::size_t workers = std::min(resolve_threads(threads), std::max<std::size_t>(count, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) results[i] = fn(i);
    return results;
  }

  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        const std::size_t begin = count * w / workers;
        const std::size_t end = count * (w + 1) / workers;
        try {
          for (std::size_t i = begin; i < end; ++i) results[i] = fn(i);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

}  // namespace latticeturb
