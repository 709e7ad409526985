#pragma once

// Exponent-order distortion bounds under the high-rate quantizer model
// D_m = 2^(-p R r). Every unknown multiplicative constant is taken as 1, so
// values are meaningful as exponents, not as absolute distortions.

#include "jscc/rate_bounds.hpp"
#include "jscc/types.hpp"

namespace jscc {

/// Transmission rate R = n/k channel bits per source component and channel
/// code rate r = m/n.
class LinkSpec {
 public:
  LinkSpec(double R, double r);

  double R() const noexcept { return R_; }
  double r() const noexcept { return r_; }
  /// Source bits per block, k R r.
  double source_bits(const SourceSpec& src) const noexcept { return src.k() * R_ * r_; }
  /// Channel bits per block, k R.
  double channel_bits(const SourceSpec& src) const noexcept { return src.k() * R_; }

 private:
  double R_;
  double r_;
};

enum class Regime {
  upper,  ///< achievable side: expurgated exponent, balanced at r_ex
  lower,  ///< converse side: straight-line (sphere-packing past r'), balanced at r_sl
};

struct DistortionBound {
  double quantizer_term = 0.0;
  double channel_term = 0.0;
  double total = 0.0;
  double rate = 0.0;
  double exponent = 0.0;
  Regime regime = Regime::upper;
  bool vacuous = false;  ///< channel exponent clamped to zero
};

double quantizer_distortion(const LinkSpec& link, const SourceSpec& src);

/// 2^(-pRr) + 2^(-kR E_ex(r)).
DistortionBound distortion_upper(const LinkSpec& link, const SourceSpec& src, const BecSpec& bec);

/// 2^(-pRr) + 2^(-kR E_sl(r)), with E_sp in place of E_sl beyond r'.
DistortionBound distortion_lower(const LinkSpec& link, const SourceSpec& src, const BecSpec& bec);

/// Distortion at the balanced rate of `regime`, where the quantizer and
/// channel terms coincide; `total` is twice the channel term there.
DistortionBound optimized_total_distortion(const SourceSpec& src, const BecSpec& bec, double R,
                                           Method method = Method::exact,
                                           Regime regime = Regime::upper);

}  // namespace jscc
