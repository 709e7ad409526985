// Serial reference vs OpenMP kernels on the workloads that dominate runtime:
// dense oracle grids, packet-plan tables and rate-bound sweeps.

#include <benchmark/benchmark.h>

#include <cmath>

#include "jscc/commands.hpp"
#include "jscc/packet_planner.hpp"
#include "jscc/verification.hpp"

namespace {

using namespace jscc;

void grid_sup(benchmark::State& state, Execution exec) {
  const auto f = [](double rho) { return rho * (1.0 - 0.7 - std::log2(1.0 + std::pow(0.01, 1.0 / rho))); };
  const verification::GridSpec grid{1.0, 1e3, static_cast<std::size_t>(state.range(0)),
                                    verification::Spacing::logarithmic};
  for (auto _ : state) benchmark::DoNotOptimize(verification::grid_sup(f, grid, exec));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void packet_plan(benchmark::State& state, Execution exec) {
  PlanRequest req;
  req.max_distortion = 1e-6;
  req.p_max = state.range(0);
  const SourceSpec src(4, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(min_packet_length(req, src, exec));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void sweep(benchmark::State& state, Execution exec) {
  cli::SweepArgs args;
  args.points = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cli::cmd_sweep(args, exec));
}

}  // namespace

BENCHMARK_CAPTURE(grid_sup, serial, Execution::serial)->Arg(1'000'000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(grid_sup, parallel, Execution::parallel)->Arg(1'000'000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(packet_plan, serial, Execution::serial)->Arg(500)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(packet_plan, parallel, Execution::parallel)->Arg(500)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(sweep, serial, Execution::serial)->Arg(25)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(sweep, parallel, Execution::parallel)->Arg(25)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
