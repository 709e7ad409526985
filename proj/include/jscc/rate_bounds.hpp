#pragma once

// Lower (expurgated) and upper (straight-line) bounds on the channel-code rate
// that minimizes end-to-end distortion for a k-dimensional source sent over a
// binary erasure channel.

#include <optional>
#include <string>
#include <vector>

#include "jscc/types.hpp"

namespace jscc {

struct CEpsilon {
  double value = 0.0;
  /// eps >= 1/4: the small-erasure asymptotics behind the root equation are
  /// a poor fit here.
  bool low_confidence = false;
};

struct RateBounds {
  double r_ex = 0.0;
  double r_sl = 0.0;
  /// Auxiliary root c_eps; empty when eps >= 1/2 where it is undefined.
  std::optional<double> c_eps;
  Method method = Method::exact;
  double capacity = 0.0;
  bool ordered = true;         ///< r_ex <= r_sl
  bool below_capacity = true;  ///< both rates < 1 - eps
  std::vector<std::string> findings;
};

/// Residual of the c_eps root equation:
///   (p/k) 2^c - [(p/k)(log2 log2(1/eps) + log2 e + c) - 2^-c] / log2(1/eps) - 1.
double c_epsilon_residual(double c, const BecSpec& bec, const SourceSpec& src);

/// Root of c_epsilon_residual with log2 log2(1/eps) + c > 0 (the branch giving a
/// positive rho). The residual is convex in c, negative at the lower end of
/// that branch and unbounded above, so the root there is unique. Requires
/// eps < 1/2.
CEpsilon solve_c_epsilon(const BecSpec& bec, const SourceSpec& src);

/// Leading-order Theorem-1 rate with the O(.) and o(1) corrections dropped:
///   1 - 2^-c (log2 log2(1/eps) + log2 e + c) / log2(1/eps).
double r_ex_asymptotic(const BecSpec& bec, const SourceSpec& src);

/// rho = log2(1/eps) / (log2 log2(1/eps) + c), then
/// r = rho / (p/k + rho) [1 - log2(1 + eps^(1/rho))].
double r_ex_simplified(const BecSpec& bec, const SourceSpec& src);

/// Unique r in (0, 1) with E_ex(r) = (p/k) r, by bisection.
double r_ex_exact(const BecSpec& bec, const SourceSpec& src);

/// E_ex(0) / (p/k - [E_sp(r') - E_ex(0)] / r').
double r_sl_bound(const BecSpec& bec, const SourceSpec& src);

/// Lower bound by `method`, upper bound, and consistency findings.
RateBounds compute_bounds(const BecSpec& bec, const SourceSpec& src, Method method = Method::exact);

}  // namespace jscc
