#pragma once

// Error exponents for discrete memoryless channels, with closed forms for the
// binary erasure channel. All logarithms are base 2; exponents are in bits per
// channel use.

#include "jscc/types.hpp"

namespace jscc {

/// Expurgated function E_x(rho, q) for a general DMC, rho >= 1:
///   -rho * log2 sum_k sum_i q(k) q(i) [sum_j sqrt(P(j|k) P(j|i))]^(1/rho)
double e_x_general(double rho, const ChannelMatrix& ch);

/// Gallager's E_0(rho, q) for a general DMC, rho >= 0:
///   -log2 sum_j [sum_k q(k) P(j|k)^(1/(1+rho))]^(1+rho)
double e0_general(double rho, const ChannelMatrix& ch);

/// 2x3 BEC transition matrix, outputs ordered (1, erasure, 0), uniform q.
ChannelMatrix bec_matrix(const BecSpec& bec);

/// E_x(rho) for the BEC under uniform input: rho [1 - log2(1 + eps^(1/rho))].
double bec_e_x(double rho, const BecSpec& bec);

/// E_0(rho) for the BEC under uniform input: rho - log2((1-eps) + eps 2^rho).
double bec_e0(double rho, const BecSpec& bec);

/// sup over rho >= 1 of rho [1 - r - log2(1 + eps^(1/rho))], clamped at 0.
/// Throws ConvergenceError if the maximizer lies beyond rho = 1e9.
ExponentValue expurgated_exponent(double r, const BecSpec& bec);

/// E_ex(0) = (1/2) log2(1/eps). This is the rho -> infinity limit of the
/// expurgated objective at r = 0; the supremum is not attained at finite rho.
double expurgated_zero_rate(const BecSpec& bec);

/// sup over rho >= 0 of rho (1 - r) - log2((1-eps) + eps 2^rho). Zero with
/// rho = 0 for r >= 1 - eps.
ExponentValue sphere_packing_sup(double r, const BecSpec& bec);

/// Parametric closed form of the sphere-packing exponent,
///   r log2 r + (1-r) log2(1-r) - r log2((1-eps)/eps) - log2 eps,
/// valid for 0 < r <= 1 - eps.
double sphere_packing_closed(double r, const BecSpec& bec);

/// Rate at which rho maximizes the sphere-packing objective:
/// (1-eps) / ((1-eps) + 2^rho eps).
double rate_for_rho(double rho, const BecSpec& bec);

/// Rate r' where the straight line from (0, E_ex(0)) touches the
/// sphere-packing curve: 1 - 2^(E_ex(0) - log2(1/eps)) = 1 - sqrt(eps).
double tangent_rate(const BecSpec& bec);

/// Straight-line exponent E_ex(0) + r [E_sp(r') - E_ex(0)] / r' for 0 <= r <= r'.
double straight_line_exponent(double r, const BecSpec& bec);

/// Slope of the straight-line exponent, [E_sp(r') - E_ex(0)] / r' (negative).
double straight_line_slope(const BecSpec& bec);

/// Straight-line exponent up to r', sphere-packing exponent beyond it.
double converse_exponent(double r, const BecSpec& bec);

}  // namespace jscc
