#include "jscc/rate_bounds.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>

#include <boost/math/tools/roots.hpp>

#include "jscc/errors.hpp"
#include "jscc/exponents.hpp"

namespace jscc {

namespace {

constexpr double kRateTol = 1e-12;
constexpr double kResidualTol = 1e-12;
constexpr double kBalanceTol = 1e-10;
constexpr double kBracketLimit = 1e3;
const double kLog2E = std::numbers::log2e;

void require_small_erasure(const BecSpec& bec, const char* what) {
  if (bec.epsilon() >= 0.5)
    throw DomainError(std::string(what) + ": requires eps < 1/2, got " + std::to_string(bec.epsilon()));
}

template <typename F>
std::pair<double, double> bisect(F&& f, double lo, double hi, double tol) {
  std::uintmax_t iterations = 200;
  return boost::math::tools::bisect(
      f, lo, hi, [tol](double a, double b) { return std::abs(b - a) <= tol; }, iterations);
}

double rho_from_c(const BecSpec& bec, double c) {
  const double l = bec.log_inv();
  return l / (std::log2(l) + c);
}

}  // namespace

double c_epsilon_residual(double c, const BecSpec& bec, const SourceSpec& src) {
  const double pk = src.p_over_k();
  const double l = bec.log_inv();
  return pk * std::exp2(c) - (pk * (std::log2(l) + kLog2E + c) - std::exp2(-c)) / l - 1.0;
}

CEpsilon solve_c_epsilon(const BecSpec& bec, const SourceSpec& src) {
  require_small_erasure(bec, "solve_c_epsilon");
  const auto f = [&](double c) { return c_epsilon_residual(c, bec, src); };
  const double lo = -std::log2(bec.log_inv());
  if (!(f(lo) < 0.0)) throw NoRootError("solve_c_epsilon: residual not negative at branch start");
  double hi = 40.0;
  while (f(hi) <= 0.0) {
    hi *= 2.0;
    if (hi > kBracketLimit) throw NoRootError("solve_c_epsilon: no sign change up to c = 1e3");
  }
  // Bisect to machine resolution; the residual check is the real criterion.
  const auto [a, b] = bisect(f, lo, hi, 0.0);
  const double c = std::abs(f(a)) <= std::abs(f(b)) ? a : b;
  if (std::abs(f(c)) >= kResidualTol)
    throw NoRootError("solve_c_epsilon: residual " + std::to_string(f(c)) + " above tolerance");
  return {c, bec.epsilon() >= 0.25};
}

double r_ex_asymptotic(const BecSpec& bec, const SourceSpec& src) {
  const double c = solve_c_epsilon(bec, src).value;
  const double l = bec.log_inv();
  return 1.0 - std::exp2(-c) * (std::log2(l) + kLog2E + c) / l;
}

double r_ex_simplified(const BecSpec& bec, const SourceSpec& src) {
  const double rho = rho_from_c(bec, solve_c_epsilon(bec, src).value);
  return rho / (src.p_over_k() + rho) * (1.0 - std::log2(1.0 + std::pow(bec.epsilon(), 1.0 / rho)));
}

double r_ex_exact(const BecSpec& bec, const SourceSpec& src) {
  const double pk = src.p_over_k();
  if (!(1.0 - std::log2(1.0 + bec.epsilon()) > 0.0))
    throw NoPositiveExponentError("r_ex_exact: expurgated exponent vanishes at every rate");
  const auto balance = [&](double r) {
    if (r <= 0.0) return expurgated_zero_rate(bec);
    if (r >= 1.0) return -pk;
    return expurgated_exponent(r, bec).value - pk * r;
  };
  const auto [a, b] = bisect(balance, 0.0, 1.0, kRateTol);
  const double r = 0.5 * (a + b);
  if (r <= 0.0 || std::abs(balance(r)) >= kBalanceTol) {
    // Midpoint may miss the residual target on a steep crossing; take the
    // better bracket end.
    const double alt = std::abs(balance(a)) < std::abs(balance(b)) ? a : b;
    if (alt <= 0.0 || std::abs(balance(alt)) >= kBalanceTol)
      throw NoPositiveExponentError("r_ex_exact: no balanced rate with positive exponent");
    return alt;
  }
  return r;
}

double r_sl_bound(const BecSpec& bec, const SourceSpec& src) {
  const double denom = src.p_over_k() - straight_line_slope(bec);
  if (!(denom > 0.0)) throw DegenerateError("r_sl_bound: non-positive denominator");
  return expurgated_zero_rate(bec) / denom;
}

RateBounds compute_bounds(const BecSpec& bec, const SourceSpec& src, Method method) {
  RateBounds out;
  out.method = method;
  out.capacity = bec.capacity();
  if (bec.epsilon() < 0.5) {
    const CEpsilon c = solve_c_epsilon(bec, src);
    out.c_eps = c.value;
    if (c.low_confidence) out.findings.emplace_back("c_eps_low_confidence");
  }
  switch (method) {
    case Method::exact: out.r_ex = r_ex_exact(bec, src); break;
    case Method::simplified: out.r_ex = r_ex_simplified(bec, src); break;
    case Method::asymptotic: out.r_ex = r_ex_asymptotic(bec, src); break;
  }
  out.r_sl = r_sl_bound(bec, src);
  out.ordered = out.r_ex <= out.r_sl;
  out.below_capacity = out.r_ex < out.capacity && out.r_sl < out.capacity;
  if (bec.outside_small_erasure_regime()) out.findings.emplace_back("outside_small_erasure_regime");
  if (!out.ordered) out.findings.emplace_back("r_ex_exceeds_r_sl");
  if (!out.below_capacity) out.findings.emplace_back("bound_at_or_above_capacity");
  return out;
}

}  // namespace jscc
