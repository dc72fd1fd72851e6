#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace hcl {

// Worker count: HCL_THREADS if set to a positive integer, else hardware concurrency.
std::size_t worker_count();

// Runs body(i) for i in [0, count). Results land in slot i, so the output order
// never depends on scheduling.
template <typename T>
std::vector<T> parallel_map(std::size_t count, const std::function<T(std::size_t)>& body);

namespace detail {
void run_indexed(std::size_t count, const std::function<void(std::size_t)>& body);
}

template <typename T>
std::vector<T> parallel_map(std::size_t count, const std::function<T(std::size_t)>& body) {
  std::vector<T> out(count);
  detail::run_indexed(count, [&](std::size_t i) { out[i] = body(i); });
  return out;
}

}  // namespace hcl
