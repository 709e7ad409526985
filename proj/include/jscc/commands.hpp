#pragma once

// Command implementations behind the `jscc` CLI. Each command has an argument
// struct, a validate() that runs before any solver, and a function producing
// the output table.

#include <optional>
#include <string>
#include <vector>

#include "jscc/chart.hpp"
#include "jscc/distortion.hpp"
#include "jscc/kernels.hpp"
#include "jscc/packet_planner.hpp"
#include "jscc/table.hpp"
#include "jscc/types.hpp"
#include "jscc/verification.hpp"

namespace jscc::cli {

inline constexpr const char* kVersion = "jscc 1.0.0";

enum ExitCode : int { ok = 0, invalid_arguments = 2, numeric_failure = 3, verification_failed = 4 };

struct ExponentsArgs {
  double epsilon = 0.01;
  double r_min = 0.05;
  double r_max = 0.95;
  int steps = 19;
};

struct BoundsArgs {
  double epsilon = 0.01;
  int k = 4;
  double p = 2.0;
  Method method = Method::exact;
};

struct PacketBoundsArgs {
  double delta = 1e-3;
  long packet_bits = 10;
  int k = 4;
  double p = 2.0;
  Method method = Method::exact;
};

enum class SweepOver { delta, epsilon };

struct SweepArgs {
  SweepOver over = SweepOver::delta;
  double min = 1e-6;
  double max = 0.1;
  int points = 25;
  verification::Spacing spacing = verification::Spacing::logarithmic;
  std::vector<long> packet_sizes{1, 10, 100};
  int k = 4;
  double p = 2.0;
  Method method = Method::exact;
};

struct PlanArgs {
  double delta = 1e-3;
  double R = 10.0;
  int k = 4;
  double p = 2.0;
  double max_distortion = 2e-5;
  long p_max = 2000;
  Method method = Method::exact;
  Regime regime = Regime::upper;
};

void validate(const ExponentsArgs& a);
void validate(const BoundsArgs& a);
void validate(const PacketBoundsArgs& a);
void validate(const SweepArgs& a);
void validate(const PlanArgs& a);

Table cmd_exponents(const ExponentsArgs& a);
Table cmd_bounds(const BoundsArgs& a);
Table cmd_packet_bounds(const PacketBoundsArgs& a);
Table cmd_sweep(const SweepArgs& a, Execution exec = Execution::parallel);
Table cmd_packet_plan(const PlanArgs& a, Execution exec = Execution::parallel);
/// Table of verification groups; `passed` receives the overall verdict.
Table cmd_verify(const verification::VerifyOptions& opts, bool& passed);

/// Default chart layout for a command's table, if it has one.
std::optional<ChartSpec> default_chart(const std::string& command);

std::string_view to_string(Regime r) noexcept;
Regime parse_regime(std::string_view name);

}  // namespace jscc::cli
