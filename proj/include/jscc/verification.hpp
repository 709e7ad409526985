#pragma once

// Brute-force oracles that re-derive every closed form and solver result
// independently: dense-grid suprema, centered differences and sign-change
// scans. Kept in the library so the CLI can re-certify a build.

#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "jscc/errors.hpp"
#include "jscc/kernels.hpp"

namespace jscc::verification {

enum class Spacing { linear, logarithmic };

struct GridSpec {
  double lo = 0.0;
  double hi = 1.0;
  std::size_t points = 1'000'000;
  Spacing spacing = Spacing::linear;

  void validate() const;
  std::vector<double> nodes() const;
};

struct GridMax {
  double argmax = 0.0;
  double max = 0.0;
};

/// Best grid node of `objective`. Resolution-limited: for a smooth unimodal
/// objective the true supremum lies within one grid step of `argmax`.
template <typename F>
GridMax grid_sup(F&& objective, const GridSpec& grid, Execution exec = Execution::parallel) {
  grid.validate();
  const std::vector<double> xs = grid.nodes();
  std::size_t bad = xs.size();
  const kernels::ArgMax best = exec == Execution::parallel ? kernels::argmax_parallel(xs, objective, &bad)
                                                           : kernels::argmax_serial(xs, objective, &bad);
  if (bad < xs.size() || !std::isfinite(best.value))
    throw NumericError("grid_sup: objective not finite on the grid");
  return {xs[best.index], best.value};
}

/// (f(x + h) - f(x - h)) / (2h).
template <typename F>
double numeric_slope(F&& f, double x, double h) {
  if (!(h > 0.0)) throw DomainError("numeric_slope: step must be > 0");
  double up = 0.0;
  double down = 0.0;
  try {
    up = f(x + h);
    down = f(x - h);
  } catch (const DomainError& e) {
    throw DomainError(std::string("numeric_slope: stencil leaves the domain: ") + e.what());
  }
  return (up - down) / (2.0 * h);
}

struct SignChange {
  double lo;
  double hi;
};

/// Adjacent grid intervals on which `equation` changes sign (an exact zero at
/// a node counts once, as the interval ending there).
template <typename F>
std::vector<SignChange> residual_scan(F&& equation, const GridSpec& grid) {
  grid.validate();
  const std::vector<double> xs = grid.nodes();
  std::vector<SignChange> out;
  double prev = equation(xs.front());
  for (std::size_t i = 1; i < xs.size(); ++i) {
    const double cur = equation(xs[i]);
    if ((prev < 0.0 && cur >= 0.0) || (prev > 0.0 && cur <= 0.0)) out.push_back({xs[i - 1], xs[i]});
    if (cur != 0.0) prev = cur;
  }
  return out;
}

struct GroupResult {
  std::string name;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  /// Name of a group whose implementation-side values get biased by
  /// `fault_magnitude`, to prove the harness can fail.
  std::optional<std::string> fault_group;
  double fault_magnitude = 1e-3;
  std::size_t grid_points = 1'000'000;
};

struct VerifyReport {
  std::vector<GroupResult> groups;
  bool all_passed() const noexcept;
};

/// Names of every group run_verification produces, in output order.
std::vector<std::string> group_names();

VerifyReport run_verification(const VerifyOptions& options = {});

}  // namespace jscc::verification
