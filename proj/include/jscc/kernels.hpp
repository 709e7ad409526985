#pragma once

// Data-parallel loops used by the oracles, sweeps and planners. Each kernel
// has a serial reference twin with identical semantics; tests compare the two
// and bench/ times them against each other.

#include <cstddef>
#include <exception>
#include <limits>
#include <utility>
#include <vector>

#include <omp.h>

namespace jscc::kernels {

struct ArgMax {
  std::size_t index = 0;
  double value = -std::numeric_limits<double>::infinity();
};

/// Index of the largest f(xs[i]). Ties resolve to the lowest index. A NaN
/// value is reported through `bad_index` (first offending index).
template <typename F>
ArgMax argmax_serial(const std::vector<double>& xs, F&& f, std::size_t* bad_index = nullptr) {
  ArgMax best;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double v = f(xs[i]);
    if (v != v) {
      if (bad_index) *bad_index = i;
      return best;
    }
    if (v > best.value) best = {i, v};
  }
  return best;
}

template <typename F>
ArgMax argmax_parallel(const std::vector<double>& xs, F&& f, std::size_t* bad_index = nullptr) {
  const auto n = static_cast<std::ptrdiff_t>(xs.size());
  ArgMax best;
  std::size_t first_bad = xs.size();
#pragma omp parallel
  {
    ArgMax local;
    std::size_t local_bad = xs.size();
#pragma omp for schedule(static) nowait
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      const double v = f(xs[static_cast<std::size_t>(i)]);
      if (v != v) {
        if (static_cast<std::size_t>(i) < local_bad) local_bad = static_cast<std::size_t>(i);
        continue;
      }
      if (v > local.value) local = {static_cast<std::size_t>(i), v};
    }
#pragma omp critical(jscc_argmax)
    {
      if (local.value > best.value || (local.value == best.value && local.index < best.index))
        best = local;
      if (local_bad < first_bad) first_bad = local_bad;
    }
  }
  if (first_bad < xs.size() && bad_index) *bad_index = first_bad;
  return best;
}

/// out[i] = f(i) for i in [0, n).
template <typename T, typename F>
std::vector<T> map_serial(std::size_t n, F&& f) {
  std::vector<T> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(f(i));
  return out;
}

/// Parallel twin of map_serial. Results land in index order regardless of
/// scheduling; the first exception (lowest index) is rethrown after the loop.
template <typename T, typename F>
std::vector<T> map_parallel(std::size_t n, F&& f) {
  std::vector<T> out(n);
  std::vector<std::exception_ptr> errors(n);
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

inline int max_threads() noexcept { return omp_get_max_threads(); }
inline void set_threads(int n) noexcept { omp_set_num_threads(n); }

}  // namespace jscc::kernels

namespace jscc {

enum class Execution { serial, parallel };

/// Dispatches to map_serial or map_parallel.
template <typename T, typename F>
std::vector<T> map_indexed(Execution exec, std::size_t n, F&& f) {
  if (exec == Execution::parallel) return kernels::map_parallel<T>(n, std::forward<F>(f));
  return kernels::map_serial<T>(n, std::forward<F>(f));
}

}  // namespace jscc
