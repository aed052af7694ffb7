#pragma once

// Corpus sweeps: apply an independent per-item computation to every input
// and return the results in input order. The OpenMP version and the serial
// reference must produce identical vectors for any job count.

#include <cstddef>
#include <exception>
#include <functional>
#include <span>
#include <type_traits>
#include <vector>

#include <omp.h>

namespace vizlab {

template <class T, class Fn>
using SweepResult = std::invoke_result_t<Fn&, const T&>;

template <class T, class Fn>
std::vector<SweepResult<T, Fn>> sweep_serial(std::span<const T> items, Fn&& fn) {
  std::vector<SweepResult<T, Fn>> out;
  out.reserve(items.size());
  for (const T& item : items) out.push_back(fn(item));
  return out;
}

/// `jobs` <= 0 uses the OpenMP default thread count. Items are handed out
/// dynamically since solver cost varies by orders of magnitude per graph.
/// The first exception (by item index) is rethrown after the loop.
template <class T, class Fn>
std::vector<SweepResult<T, Fn>> sweep_parallel(std::span<const T> items, Fn&& fn, int jobs) {
  using R = SweepResult<T, Fn>;
  static_assert(std::is_default_constructible_v<R>, "sweep results are pre-allocated");
  const auto count = static_cast<std::ptrdiff_t>(items.size());
  std::vector<R> out(items.size());
  std::vector<std::exception_ptr> errors(items.size());
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();

#pragma omp parallel for num_threads(threads) schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = fn(items[static_cast<std::size_t>(i)]);
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }

  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace vizlab
