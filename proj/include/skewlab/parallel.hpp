#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

namespace skewlab {

/// Runs fn(0) .. fn(count-1) across up to `workers` threads and returns the
/// results in index order, so the output is identical for any worker count.
/// When calls throw, every task still runs and the exception raised by the
/// smallest index is rethrown, which keeps failures deterministic too.
template <typename R, typename F>
std::vector<R> parallel_map(std::size_t count, int workers, F&& fn) {
  std::vector<std::optional<R>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto body = [&]() {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        slots[i].emplace(fn(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers <= 1 || count <= 1) {
    body();
  } else {
    std::vector<std::thread> pool;
    const std::size_t spawn = std::min<std::size_t>(static_cast<std::size_t>(workers), count);
    for (std::size_t t = 0; t < spawn; ++t) pool.emplace_back(body);
    for (auto& th : pool) th.join();
  }
  for (std::size_t i = 0; i < count; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
  }
  std::vector<R> out;
  out.reserve(count);
  for (auto& slot : slots) out.push_back(std::move(*slot));
  return out;
}

}  // namespace skewlab
