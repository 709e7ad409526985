#pragma once

// Packet-erasure channels handled through their equivalent binary erasure
// channel: a packet of P bits is lost when any of its bits is erased, so
// delta = 1 - (1 - eps)^P.

#include <optional>
#include <vector>

#include "jscc/distortion.hpp"
#include "jscc/kernels.hpp"
#include "jscc/rate_bounds.hpp"
#include "jscc/types.hpp"

namespace jscc {

class PacketSpec {
 public:
  PacketSpec(double delta, long packet_bits);

  double delta() const noexcept { return delta_; }
  long packet_bits() const noexcept { return packet_bits_; }
  /// Bit-erasure channel with the same loss behaviour per packet.
  BecSpec equivalent_bec() const;

 private:
  double delta_;
  long packet_bits_;
};

double delta_from_epsilon(double epsilon, long packet_bits);
double epsilon_from_delta(double delta, long packet_bits);

RateBounds packet_rate_bounds(const PacketSpec& pkt, const SourceSpec& src, Method method = Method::exact);

struct PlanRow {
  long packet_bits = 0;
  double epsilon = 0.0;
  double rate = 0.0;
  double distortion = 0.0;
};

struct PacketPlan {
  std::optional<long> p_min;
  std::vector<PlanRow> table;
  bool achievable() const noexcept { return p_min.has_value(); }
};

struct PlanRequest {
  double delta = 1e-3;
  double R = 10.0;
  double max_distortion = 0.0;
  long p_max = 2000;
  Method method = Method::exact;
  Regime regime = Regime::upper;
};

/// Optimized total distortion for P = 1..p_max on the equivalent BEC; p_min is
/// the first P at or below max_distortion.
PacketPlan min_packet_length(const PlanRequest& req, const SourceSpec& src,
                             Execution exec = Execution::parallel);

}  // namespace jscc
