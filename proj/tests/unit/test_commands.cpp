#include <cmath>

#include "doctest.h"
#include "jscc/commands.hpp"
#include "jscc/errors.hpp"

using namespace jscc;
using namespace jscc::cli;

TEST_CASE("exponents command") {
  const Table t = cmd_exponents(ExponentsArgs{0.01, 0.05, 0.95, 19});
  REQUIRE(t.rows.size() == 19);
  const std::size_t e_sp = t.column_index("e_sp");
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const double r = *t.number(i, "r");
    if (std::abs(r - 0.9) < 1e-12) CHECK(std::get<double>(t.rows[i][e_sp]) == doctest::Approx(0.208439).epsilon(1e-5));
    if (r > 0.9) CHECK(std::holds_alternative<std::monostate>(t.rows[i][t.column_index("e_sl")]));
  }
  CHECK(t.columns.back() == "findings");

  CHECK_THROWS_AS(validate(ExponentsArgs{0.01, 0.5, 0.4, 19}), DomainError);
  CHECK_THROWS_AS(validate(ExponentsArgs{0.01, 0.05, 0.95, 1}), DomainError);
}

TEST_CASE("exponents command clamps at capacity") {
  const Table t = cmd_exponents(ExponentsArgs{0.1, 0.5, 0.95, 10});
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    if (*t.number(i, "r") >= 0.9) CHECK(*t.number(i, "e_sp") == 0.0);
}

TEST_CASE("bounds command") {
  const Table t = cmd_bounds(BoundsArgs{0.01, 4, 2.0, Method::exact});
  CHECK(*t.number(0, "r_ex") == doctest::Approx(0.702).epsilon(0.01));
  CHECK(*t.number(0, "r_sl") == doctest::Approx(0.839).epsilon(0.005));

  const Table half = cmd_bounds(BoundsArgs{0.5, 4, 2.0, Method::exact});
  CHECK(std::get<std::string>(half.rows[0].back()).find("outside_small_erasure_regime") != std::string::npos);

  CHECK_THROWS_AS(validate(BoundsArgs{1.5, 4, 2.0, Method::exact}), DomainError);
  CHECK_THROWS_AS(validate(BoundsArgs{0.5, 4, 2.0, Method::simplified}), DomainError);
  CHECK_THROWS_AS(validate(BoundsArgs{0.01, 0, 2.0, Method::exact}), DomainError);
}

TEST_CASE("sweep command") {
  SweepArgs a;
  a.points = 6;
  const Table t = cmd_sweep(a);
  CHECK(t.rows.size() == 18);
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const auto ex = t.number(i, "r_ex");
    const auto sl = t.number(i, "r_sl");
    REQUIRE(ex);
    const auto& findings = std::get<std::string>(t.rows[i].back());
    CHECK((*ex <= *sl || findings.find("r_ex_exceeds_r_sl") != std::string::npos));
  }
  // Rows are grouped by packet size in order: P=100 block dominates P=10 block.
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(*t.number(12 + i, "r_ex") > *t.number(6 + i, "r_ex"));
    CHECK(*t.number(12 + i, "r_sl") > *t.number(6 + i, "r_sl"));
  }
  CHECK(to_csv(cmd_sweep(a, Execution::serial)) == to_csv(t));
}

TEST_CASE("sweep records per-row failures") {
  SweepArgs a;
  a.over = SweepOver::epsilon;
  a.min = 0.1;
  a.max = 0.6;
  a.points = 3;
  a.spacing = verification::Spacing::linear;
  a.packet_sizes = {1};
  a.method = Method::simplified;
  const Table t = cmd_sweep(a);
  REQUIRE(t.rows.size() == 3);
  CHECK(std::get<std::string>(t.rows[0][t.column_index("error")]).empty());
  CHECK_FALSE(std::get<std::string>(t.rows[2][t.column_index("error")]).empty());
  CHECK(std::holds_alternative<std::monostate>(t.rows[2][t.column_index("r_ex")]));
}

TEST_CASE("packet-plan command") {
  PlanArgs a;
  a.p_max = 50;
  a.max_distortion = 2.0;
  const Table t = cmd_packet_plan(a);
  CHECK(t.rows.size() == 50);
  bool saw_p_min = false;
  for (const auto& [k, v] : t.meta)
    if (k == "p_min") saw_p_min = std::get<double>(v) == 1.0;
  CHECK(saw_p_min);

  a.max_distortion = 1e-30;
  const Table none = cmd_packet_plan(a);
  for (const auto& [k, v] : none.meta) {
    if (k == "p_min") CHECK(std::holds_alternative<std::monostate>(v));
    if (k == "achievable") CHECK(std::get<std::string>(v) == "false");
  }
  a.max_distortion = -1.0;
  CHECK_THROWS_AS(validate(a), DomainError);
}
