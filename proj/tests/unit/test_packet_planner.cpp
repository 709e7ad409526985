#include <cmath>

#include "doctest.h"
#include "jscc/errors.hpp"
#include "jscc/packet_planner.hpp"

using namespace jscc;

TEST_CASE("delta/epsilon conversion") {
  CHECK(delta_from_epsilon(0.1, 1) == doctest::Approx(0.1).epsilon(1e-15));
  CHECK(delta_from_epsilon(1e-4, 10) == doctest::Approx(1.0 - std::pow(0.9999, 10)).epsilon(1e-12));
  CHECK(delta_from_epsilon(1e-4, 10) == doctest::Approx(9.9955e-4).epsilon(1e-5));
  CHECK(epsilon_from_delta(1e-3, 1) == 1e-3);
  CHECK(epsilon_from_delta(1e-3, 10) == doctest::Approx(1.00045e-4).epsilon(1e-5));
  CHECK(epsilon_from_delta(1e-3, 100) == doctest::Approx(1.00050e-5).epsilon(1e-5));
  CHECK_THROWS_AS(epsilon_from_delta(1.0, 10), DomainError);
  CHECK_THROWS_AS(delta_from_epsilon(0.1, 0), DomainError);
}

TEST_CASE("conversion properties") {
  for (double eps : {1e-6, 1e-5, 1e-4, 1e-3, 1e-2, 0.1}) {
    for (long P : {1L, 10L, 100L, 1000L}) {
      if (eps == 0.1 && P == 1000) {
        CHECK_THROWS_AS(delta_from_epsilon(eps, P), DegenerateError);
        continue;
      }
      const double delta = delta_from_epsilon(eps, P);
      CHECK(std::abs(epsilon_from_delta(delta, P) - eps) < 1e-12);
      CHECK(delta > 0.0);
      CHECK(delta < 1.0);
    }
  }
  for (double delta : {1e-6, 1e-4, 1e-3}) {
    for (long P : {1L, 2L, 10L, 100L, 1000L}) {
      const double eps = epsilon_from_delta(delta, P);
      if (P == 1) CHECK(eps == delta);
      else CHECK(eps < delta);
      CHECK(std::abs(eps * static_cast<double>(P) / delta - 1.0) < 0.01);
    }
  }
}

TEST_CASE("PacketSpec") {
  CHECK_THROWS_AS(PacketSpec(0.0, 10), DomainError);
  CHECK_THROWS_AS(PacketSpec(1e-3, 0), DomainError);
  CHECK(PacketSpec(1e-3, 10).equivalent_bec().epsilon() == epsilon_from_delta(1e-3, 10));
}

TEST_CASE("packet_rate_bounds") {
  const SourceSpec src(4, 2.0);
  const RateBounds b1 = packet_rate_bounds(PacketSpec(1e-3, 1), src);
  const RateBounds b10 = packet_rate_bounds(PacketSpec(1e-3, 10), src);
  const RateBounds b100 = packet_rate_bounds(PacketSpec(1e-3, 100), src);
  CHECK(b10.r_ex > b1.r_ex);
  CHECK(b100.r_ex > b10.r_ex);
  CHECK(b10.r_sl > b1.r_sl);
  CHECK(b100.r_sl > b10.r_sl);

  const RateBounds direct = compute_bounds(BecSpec(epsilon_from_delta(1e-3, 10)), src);
  CHECK(direct.r_ex == b10.r_ex);
  CHECK(direct.r_sl == b10.r_sl);

  double prev_ex = 2.0;
  double prev_sl = 2.0;
  for (double delta : {1e-6, 1e-4, 1e-3, 1e-2, 0.1}) {
    const RateBounds b = packet_rate_bounds(PacketSpec(delta, 10), src);
    CHECK(b.r_ex <= prev_ex);
    CHECK(b.r_sl <= prev_sl);
    prev_ex = b.r_ex;
    prev_sl = b.r_sl;
  }
}

TEST_CASE("min_packet_length") {
  const SourceSpec src(4, 2.0);
  PlanRequest req;
  req.delta = 1e-3;
  req.R = 10.0;
  req.max_distortion = 2.0;
  req.p_max = 50;
  const PacketPlan loose = min_packet_length(req, src);
  REQUIRE(loose.p_min.has_value());
  CHECK(*loose.p_min == 1);
  CHECK(loose.table.size() == 50);
  for (std::size_t i = 1; i < loose.table.size(); ++i) {
    CHECK(loose.table[i].packet_bits == static_cast<long>(i) + 1);
    CHECK(loose.table[i].distortion <= loose.table[i - 1].distortion);
    CHECK(loose.table[i].rate >= loose.table[i - 1].rate);
  }

  req.max_distortion = 2e-5;
  req.p_max = 200;
  const PacketPlan mid = min_packet_length(req, src);
  REQUIRE(mid.achievable());
  const long p = *mid.p_min;
  CHECK(p > 1);
  CHECK(mid.table[static_cast<std::size_t>(p - 1)].distortion <= 2e-5);
  CHECK(mid.table[static_cast<std::size_t>(p - 2)].distortion > 2e-5);

  req.max_distortion = 1e-30;
  req.p_max = 100;
  const PacketPlan none = min_packet_length(req, src);
  CHECK_FALSE(none.achievable());
  CHECK(none.table.size() == 100);

  req.max_distortion = 0.0;
  CHECK_THROWS_AS(min_packet_length(req, src), DomainError);
}

TEST_CASE("packet plan serial and parallel tables match") {
  const SourceSpec src(4, 2.0);
  PlanRequest req;
  req.max_distortion = 1e-5;
  req.p_max = 64;
  const PacketPlan a = min_packet_length(req, src, Execution::serial);
  const PacketPlan b = min_packet_length(req, src, Execution::parallel);
  REQUIRE(a.table.size() == b.table.size());
  for (std::size_t i = 0; i < a.table.size(); ++i) {
    CHECK(a.table[i].distortion == b.table[i].distortion);
    CHECK(a.table[i].rate == b.table[i].rate);
  }
  CHECK(a.p_min == b.p_min);
}
