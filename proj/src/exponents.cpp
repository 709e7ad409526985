#include "jscc/exponents.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "jscc/errors.hpp"

namespace jscc {

namespace {

constexpr double kRhoLimit = 1e9;
constexpr double kRelRhoTol = 1e-9;
constexpr int kSeedPoints = 64;
constexpr double kSeedTop = 1e4;

double log2_1p(double x) { return std::log1p(x) / std::numbers::ln2; }

// log2(2^a + 2^b) without overflow.
double log2_add(double a, double b) {
  const double hi = std::max(a, b);
  const double lo = std::min(a, b);
  return hi + log2_1p(std::exp2(lo - hi));
}

void require_rate(double r, const char* what) {
  if (!(r > 0.0 && r < 1.0))
    throw DomainError(std::string(what) + ": rate must lie in (0, 1), got " + std::to_string(r));
}

struct Peak {
  double x;
  double value;
};

// Golden-section maximization of a unimodal f on [a, b].
template <typename F>
Peak golden_max(F&& f, double a, double b) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while ((b - a) > kRelRhoTol * (1.0 + std::abs(0.5 * (a + b)))) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  const double x = 0.5 * (a + b);
  return {x, f(x)};
}

// Grows [lo, lo + step] geometrically until f decreases at the upper end,
// then refines. Returns the interior maximizer (which may sit at lo).
template <typename F>
Peak bracketed_max(F&& f, double lo, double step, const char* what) {
  double prev = lo;
  double cur = lo + step;
  double f_prev = f(prev);
  double f_cur = f(cur);
  if (f_cur <= f_prev) return golden_max(f, lo, cur);
  for (;;) {
    step *= 2.0;
    const double next = lo + step;
    if (next > kRhoLimit)
      throw ConvergenceError(std::string(what) + ": maximizer beyond rho = 1e9");
    const double f_next = f(next);
    if (f_next <= f_cur) return golden_max(f, prev, next);
    prev = cur;
    f_prev = f_cur;
    cur = next;
    f_cur = f_next;
  }
}

ExponentValue clamp(Peak p) {
  if (p.value > 0.0) return {p.value, p.x, false};
  return {0.0, p.x, true};
}

}  // namespace

double e_x_general(double rho, const ChannelMatrix& ch) {
  if (!(rho >= 1.0)) throw DomainError("e_x_general: rho must be >= 1");
  const auto q = ch.input_dist();
  double total = 0.0;
  for (std::size_t k = 0; k < ch.inputs(); ++k) {
    for (std::size_t i = 0; i < ch.inputs(); ++i) {
      double overlap = 0.0;
      for (std::size_t j = 0; j < ch.outputs(); ++j) overlap += std::sqrt(ch(k, j) * ch(i, j));
      total += q[k] * q[i] * std::pow(overlap, 1.0 / rho);
    }
  }
  return -rho * std::log2(total);
}

double e0_general(double rho, const ChannelMatrix& ch) {
  if (!(rho >= 0.0)) throw DomainError("e0_general: rho must be >= 0");
  const auto q = ch.input_dist();
  const double power = 1.0 / (1.0 + rho);
  double total = 0.0;
  for (std::size_t j = 0; j < ch.outputs(); ++j) {
    double inner = 0.0;
    for (std::size_t k = 0; k < ch.inputs(); ++k) inner += q[k] * std::pow(ch(k, j), power);
    total += std::pow(inner, 1.0 + rho);
  }
  return -std::log2(total);
}

ChannelMatrix bec_matrix(const BecSpec& bec) {
  const double e = bec.epsilon();
  return ChannelMatrix(2, 3, {1.0 - e, e, 0.0, 0.0, e, 1.0 - e}, {0.5, 0.5});
}

double bec_e_x(double rho, const BecSpec& bec) {
  return rho * (1.0 - log2_1p(std::exp2(-bec.log_inv() / rho)));
}

double bec_e0(double rho, const BecSpec& bec) {
  const double e = bec.epsilon();
  return rho - log2_add(std::log2(1.0 - e), std::log2(e) + rho);
}

ExponentValue expurgated_exponent(double r, const BecSpec& bec) {
  require_rate(r, "expurgated_exponent");
  const auto objective = [&](double rho) { return bec_e_x(rho, bec) - rho * r; };

  // Seed from a log-spaced grid, then refine around the best seed.
  const double ratio = std::pow(kSeedTop, 1.0 / (kSeedPoints - 1));
  int best = 0;
  double best_value = objective(1.0);
  double x = 1.0;
  for (int i = 1; i < kSeedPoints; ++i) {
    x *= ratio;
    const double v = objective(x);
    if (v > best_value) {
      best = i;
      best_value = v;
    }
  }
  Peak peak;
  if (best == kSeedPoints - 1) {
    const double from = std::pow(ratio, best - 1);
    peak = bracketed_max(objective, from, kSeedTop - from, "expurgated_exponent");
  } else {
    const double lo = best == 0 ? 1.0 : std::pow(ratio, best - 1);
    const double hi = std::pow(ratio, best + 1);
    peak = golden_max(objective, lo, hi);
  }
  const double boundary = objective(1.0);
  if (boundary >= peak.value) peak = {1.0, boundary};
  return clamp(peak);
}

double expurgated_zero_rate(const BecSpec& bec) { return 0.5 * bec.log_inv(); }

ExponentValue sphere_packing_sup(double r, const BecSpec& bec) {
  require_rate(r, "sphere_packing_sup");
  if (r >= bec.capacity()) return {0.0, 0.0, true};
  const auto objective = [&](double rho) { return bec_e0(rho, bec) - rho * r; };
  Peak peak = bracketed_max(objective, 0.0, 1.0, "sphere_packing_sup");
  const double boundary = objective(0.0);
  if (boundary >= peak.value) peak = {0.0, boundary};
  return clamp(peak);
}

double sphere_packing_closed(double r, const BecSpec& bec) {
  const double e = bec.epsilon();
  if (!(r > 0.0 && r <= bec.capacity()))
    throw DomainError("sphere_packing_closed: rate must lie in (0, 1 - eps], got " + std::to_string(r));
  // Rearranged as the binary divergence D(r || 1 - eps) for accuracy near capacity.
  double value = r * std::log2(r / (1.0 - e));
  if (r < 1.0) value += (1.0 - r) * std::log2((1.0 - r) / e);
  return std::max(value, 0.0);
}

double rate_for_rho(double rho, const BecSpec& bec) {
  if (!(rho >= 0.0)) throw DomainError("rate_for_rho: rho must be >= 0");
  const double e = bec.epsilon();
  return (1.0 - e) / ((1.0 - e) + std::exp2(rho) * e);
}

double tangent_rate(const BecSpec& bec) {
  const double from_exponent = 1.0 - std::exp2(expurgated_zero_rate(bec) - bec.log_inv());
  const double from_root = 1.0 - std::sqrt(bec.epsilon());
  if (std::abs(from_exponent - from_root) > 1e-12)
    throw std::logic_error("tangent_rate: exponent and square-root forms disagree");
  return from_root;
}

double straight_line_slope(const BecSpec& bec) {
  const double rp = tangent_rate(bec);
  return (sphere_packing_closed(rp, bec) - expurgated_zero_rate(bec)) / rp;
}

double straight_line_exponent(double r, const BecSpec& bec) {
  const double rp = tangent_rate(bec);
  if (!(r >= 0.0 && r <= rp))
    throw DomainError("straight_line_exponent: rate must lie in [0, r'], got " + std::to_string(r));
  if (r == rp) return sphere_packing_closed(rp, bec);
  return expurgated_zero_rate(bec) + r * straight_line_slope(bec);
}

double converse_exponent(double r, const BecSpec& bec) {
  if (r <= tangent_rate(bec)) return straight_line_exponent(r, bec);
  return sphere_packing_sup(r, bec).value;
}

}  // namespace jscc
