#include "jscc/packet_planner.hpp"

#include <cmath>
#include <string>

#include "jscc/errors.hpp"

namespace jscc {

namespace {

void require_probability(double x, const char* what) {
  if (!(x > 0.0 && x < 1.0))
    throw DomainError(std::string(what) + " must lie in (0, 1), got " + std::to_string(x));
}

void require_packet_bits(long bits) {
  if (bits < 1) throw DomainError("packet size must be >= 1 bit");
}

}  // namespace

PacketSpec::PacketSpec(double delta, long packet_bits) : delta_(delta), packet_bits_(packet_bits) {
  require_probability(delta, "packet erasure probability");
  require_packet_bits(packet_bits);
}

BecSpec PacketSpec::equivalent_bec() const { return BecSpec(epsilon_from_delta(delta_, packet_bits_)); }

double delta_from_epsilon(double epsilon, long packet_bits) {
  require_probability(epsilon, "bit erasure probability");
  require_packet_bits(packet_bits);
  const double delta = -std::expm1(static_cast<double>(packet_bits) * std::log1p(-epsilon));
  // 1 - (1 - eps)^P can sit closer to 1 than one ulp; the inverse is then lost.
  if (!(delta < 1.0))
    throw DegenerateError("packet erasure probability rounds to 1 for epsilon=" + std::to_string(epsilon) +
                          ", P=" + std::to_string(packet_bits));
  return delta;
}

double epsilon_from_delta(double delta, long packet_bits) {
  require_probability(delta, "packet erasure probability");
  require_packet_bits(packet_bits);
  if (packet_bits == 1) return delta;
  return -std::expm1(std::log1p(-delta) / static_cast<double>(packet_bits));
}

RateBounds packet_rate_bounds(const PacketSpec& pkt, const SourceSpec& src, Method method) {
  return compute_bounds(pkt.equivalent_bec(), src, method);
}

PacketPlan min_packet_length(const PlanRequest& req, const SourceSpec& src, Execution exec) {
  require_probability(req.delta, "packet erasure probability");
  if (!(req.max_distortion > 0.0)) throw DomainError("distortion limit must be > 0");
  if (!(req.R > 0.0)) throw DomainError("transmission rate R must be > 0");
  require_packet_bits(req.p_max);

  PacketPlan plan;
  plan.table = map_indexed<PlanRow>(exec, static_cast<std::size_t>(req.p_max), [&](std::size_t i) {
    const PacketSpec pkt(req.delta, static_cast<long>(i) + 1);
    const BecSpec bec = pkt.equivalent_bec();
    const DistortionBound d = optimized_total_distortion(src, bec, req.R, req.method, req.regime);
    return PlanRow{pkt.packet_bits(), bec.epsilon(), d.rate, d.total};
  });
  for (const PlanRow& row : plan.table) {
    if (row.distortion <= req.max_distortion) {
      plan.p_min = row.packet_bits;
      break;
    }
  }
  return plan;
}

}  // namespace jscc
