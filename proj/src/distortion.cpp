#include "jscc/distortion.hpp"

#include <cmath>
#include <string>

#include "jscc/errors.hpp"
#include "jscc/exponents.hpp"

namespace jscc {

LinkSpec::LinkSpec(double R, double r) : R_(R), r_(r) {
  if (!(R > 0.0) || !std::isfinite(R)) throw DomainError("transmission rate R must be > 0");
  if (!(r > 0.0 && r < 1.0)) throw DomainError("code rate r must lie in (0, 1), got " + std::to_string(r));
}

double quantizer_distortion(const LinkSpec& link, const SourceSpec& src) {
  return std::exp2(-src.p() * link.R() * link.r());
}

namespace {

DistortionBound assemble(const LinkSpec& link, const SourceSpec& src, double exponent, Regime regime,
                         bool vacuous) {
  DistortionBound out;
  out.quantizer_term = quantizer_distortion(link, src);
  out.channel_term = std::exp2(-src.k() * link.R() * exponent);
  out.total = out.quantizer_term + out.channel_term;
  out.rate = link.r();
  out.exponent = exponent;
  out.regime = regime;
  out.vacuous = vacuous;
  return out;
}

}  // namespace

DistortionBound distortion_upper(const LinkSpec& link, const SourceSpec& src, const BecSpec& bec) {
  const ExponentValue e = expurgated_exponent(link.r(), bec);
  return assemble(link, src, e.value, Regime::upper, e.vacuous);
}

DistortionBound distortion_lower(const LinkSpec& link, const SourceSpec& src, const BecSpec& bec) {
  const double e = converse_exponent(link.r(), bec);
  return assemble(link, src, e, Regime::lower, !(e > 0.0));
}

DistortionBound optimized_total_distortion(const SourceSpec& src, const BecSpec& bec, double R,
                                           Method method, Regime regime) {
  DistortionBound out;
  if (regime == Regime::upper) {
    double r = 0.0;
    switch (method) {
      case Method::exact: r = r_ex_exact(bec, src); break;
      case Method::simplified: r = r_ex_simplified(bec, src); break;
      case Method::asymptotic: r = r_ex_asymptotic(bec, src); break;
    }
    out = distortion_upper(LinkSpec(R, r), src, bec);
  } else {
    out = distortion_lower(LinkSpec(R, r_sl_bound(bec, src)), src, bec);
  }
  out.total = 2.0 * out.channel_term;
  return out;
}

}  // namespace jscc
