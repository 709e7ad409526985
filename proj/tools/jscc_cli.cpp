// jscc: rate allocation between source and channel coding on erasure channels.

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "jscc/commands.hpp"
#include "jscc/errors.hpp"

namespace {

using namespace jscc;
using namespace jscc::cli;

struct OutputOptions {
  std::string format = "csv";
  std::string out;
  std::string chart;
  bool timestamp = false;
};

void add_output_flags(CLI::App* cmd, OutputOptions& o, bool chart) {
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", o.out, "Output file (default: standard output)");
  if (chart) cmd->add_option("--chart", o.chart, "Also write an SVG chart to this path");
  cmd->add_flag("--timestamp", o.timestamp, "Record the generation time in the metadata");
}

void add_method_flag(CLI::App* cmd, std::string& method) {
  cmd->add_option("--method", method, "Lower-bound rate variant")
      ->check(CLI::IsMember({"exact", "simplified", "asymptotic"}));
}

void add_source_flags(CLI::App* cmd, int& k, double& p) {
  cmd->add_option("--k", k, "Source vector dimension");
  cmd->add_option("--p", p, "Power of the distortion measure");
}

void write_output(Table table, const OutputOptions& o) {
  if (o.timestamp) {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    table.meta.emplace_back("timestamp", std::string(buf));
  }
  const std::string text = render(table, parse_format(o.format));
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file '" + o.out + "'");
    f << text;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Source/channel coding-rate allocation for bit- and packet-erasure channels"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "Worker threads for parallel loops (default: OpenMP default)");

  OutputOptions out;

  ExponentsArgs ex;
  auto* c_ex = app.add_subcommand("exponents", "Expurgated, sphere-packing and straight-line exponent curves");
  c_ex->add_option("--epsilon", ex.epsilon, "Bit-erasure probability");
  c_ex->add_option("--r-min", ex.r_min, "Smallest rate");
  c_ex->add_option("--r-max", ex.r_max, "Largest rate");
  c_ex->add_option("--steps", ex.steps, "Number of rates");
  add_output_flags(c_ex, out, true);

  BoundsArgs bd;
  std::string bd_method = "exact";
  auto* c_bd = app.add_subcommand("bounds", "Lower and upper bounds on the optimal channel-code rate");
  c_bd->add_option("--epsilon", bd.epsilon, "Bit-erasure probability");
  add_source_flags(c_bd, bd.k, bd.p);
  add_method_flag(c_bd, bd_method);
  add_output_flags(c_bd, out, false);

  PacketBoundsArgs pb;
  std::string pb_method = "exact";
  auto* c_pb = app.add_subcommand("packet-bounds", "Rate bounds for a packet-erasure channel");
  c_pb->add_option("--delta", pb.delta, "Packet-erasure probability");
  c_pb->add_option("--packet-size", pb.packet_bits, "Packet size in bits");
  add_source_flags(c_pb, pb.k, pb.p);
  add_method_flag(c_pb, pb_method);
  add_output_flags(c_pb, out, false);

  SweepArgs sw;
  std::string sw_method = "exact";
  std::string sw_over = "delta";
  std::string sw_spacing = "log";
  double sw_delta = 0.0;
  auto* c_sw = app.add_subcommand("sweep", "Rate bounds over a range of erasure probabilities and packet sizes");
  c_sw->add_option("--over", sw_over, "Swept quantity: packet (delta) or bit (epsilon) erasure probability")
      ->check(CLI::IsMember({"delta", "epsilon"}));
  c_sw->add_option("--min", sw.min, "Smallest erasure probability");
  c_sw->add_option("--max", sw.max, "Largest erasure probability");
  c_sw->add_option("--points", sw.points, "Number of probabilities");
  c_sw->add_option("--spacing", sw_spacing, "Probability spacing")->check(CLI::IsMember({"log", "linear"}));
  auto* delta_opt = c_sw->add_option("--delta", sw_delta, "Single packet-erasure probability (overrides the range)");
  c_sw->add_option("--packet-sizes", sw.packet_sizes, "Packet sizes in bits")->delimiter(',');
  add_source_flags(c_sw, sw.k, sw.p);
  add_method_flag(c_sw, sw_method);
  add_output_flags(c_sw, out, true);

  PlanArgs pl;
  std::string pl_method = "exact";
  std::string pl_regime = "upper";
  auto* c_pl = app.add_subcommand("packet-plan", "Smallest packet size meeting a distortion limit");
  c_pl->add_option("--delta", pl.delta, "Packet-erasure probability");
  c_pl->add_option("--R", pl.R, "Channel bits per source component");
  add_source_flags(c_pl, pl.k, pl.p);
  c_pl->add_option("--max-distortion", pl.max_distortion, "End-to-end distortion limit");
  c_pl->add_option("--p-max", pl.p_max, "Largest packet size scanned");
  add_method_flag(c_pl, pl_method);
  c_pl->add_option("--regime", pl_regime, "Bound used for planning")->check(CLI::IsMember({"upper", "lower"}));
  add_output_flags(c_pl, out, true);

  verification::VerifyOptions vo;
  std::string fault;
  auto* c_vf = app.add_subcommand("verify", "Re-derive closed forms and fixtures with brute-force oracles");
  c_vf->add_option("--grid-points", vo.grid_points, "Points per oracle grid")->check(CLI::Range(1000, 100'000'000));
  c_vf->add_option("--inject-fault", fault, "Bias the named group's implementation values (harness self-test)")
      ->check(CLI::IsMember(verification::group_names()));
  add_output_flags(c_vf, out, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return ExitCode::invalid_arguments;
  }
  if (threads > 0) kernels::set_threads(threads);

  // Validation runs before any solver; DomainError from here on means bad flags.
  try {
    if (*c_ex) {
      validate(ex);
      const Table t = cmd_exponents(ex);
      if (!out.chart.empty()) emit_chart(t, *default_chart("exponents"), out.chart);
      write_output(t, out);
    } else if (*c_bd) {
      bd.method = parse_method(bd_method);
      validate(bd);
      write_output(cmd_bounds(bd), out);
    } else if (*c_pb) {
      pb.method = parse_method(pb_method);
      validate(pb);
      write_output(cmd_packet_bounds(pb), out);
    } else if (*c_sw) {
      sw.method = parse_method(sw_method);
      sw.over = sw_over == "delta" ? SweepOver::delta : SweepOver::epsilon;
      sw.spacing = sw_spacing == "log" ? verification::Spacing::logarithmic : verification::Spacing::linear;
      if (*delta_opt) {
        sw.over = SweepOver::delta;
        sw.min = sw.max = sw_delta;
        sw.points = 1;
      }
      validate(sw);
      const Table t = cmd_sweep(sw);
      if (!out.chart.empty()) {
        ChartSpec spec = *default_chart("sweep");
        spec.x_column = sw.over == SweepOver::delta ? "delta" : "epsilon";
        spec.log_x = sw.spacing == verification::Spacing::logarithmic;
        emit_chart(t, spec, out.chart);
      }
      write_output(t, out);
    } else if (*c_pl) {
      pl.method = parse_method(pl_method);
      pl.regime = parse_regime(pl_regime);
      validate(pl);
      const Table t = cmd_packet_plan(pl);
      if (!out.chart.empty()) emit_chart(t, *default_chart("packet-plan"), out.chart);
      write_output(t, out);
    } else if (*c_vf) {
      if (!fault.empty()) vo.fault_group = fault;
      bool passed = false;
      write_output(cmd_verify(vo, passed), out);
      if (!passed) {
        std::cerr << "verification failed\n";
        return ExitCode::verification_failed;
      }
    }
  } catch (const DomainError& e) {
    std::cerr << "error: invalid argument: " << e.what() << '\n';
    return ExitCode::invalid_arguments;
  } catch (const NumericError& e) {
    std::cerr << "error: numeric failure: " << e.what() << '\n';
    return ExitCode::numeric_failure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return ExitCode::ok;
}
