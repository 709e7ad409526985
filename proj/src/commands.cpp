#include "jscc/commands.hpp"

#include <cmath>
#include <string>

#include "jscc/errors.hpp"
#include "jscc/exponents.hpp"
#include "jscc/rate_bounds.hpp"

namespace jscc::cli {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw DomainError(message);
}

void require_probability(double x, const char* flag) {
  require(x > 0.0 && x < 1.0, std::string(flag) + " must lie in (0, 1)");
}

void require_source(int k, double p) {
  require(k >= 1, "--k must be >= 1");
  require(p > 0.0 && std::isfinite(p), "--p must be > 0");
}

void require_method_domain(Method m, double epsilon) {
  if (m != Method::exact)
    require(epsilon < 0.5, "--method " + std::string(to_string(m)) + " needs a bit-erasure probability below 0.5");
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : ";") + p;
  return out;
}

Cell optional_cell(const std::optional<double>& v) {
  if (v) return *v;
  return std::monostate{};
}

void base_meta(Table& t, const std::string& command) {
  t.meta.emplace_back("command", command);
  t.meta.emplace_back("version", std::string(kVersion));
}

std::vector<double> spaced(double lo, double hi, int n, verification::Spacing s) {
  if (n == 1) return {lo};
  return verification::GridSpec{lo, hi, static_cast<std::size_t>(n), s}.nodes();
}

}  // namespace

std::string_view to_string(Regime r) noexcept { return r == Regime::upper ? "upper" : "lower"; }

Regime parse_regime(std::string_view name) {
  if (name == "upper") return Regime::upper;
  if (name == "lower") return Regime::lower;
  throw DomainError("unknown regime '" + std::string(name) + "'");
}

void validate(const ExponentsArgs& a) {
  require_probability(a.epsilon, "--epsilon");
  require(a.r_min > 0.0 && a.r_min < a.r_max && a.r_max < 1.0, "rates must satisfy 0 < --r-min < --r-max < 1");
  require(a.steps >= 2, "--steps must be >= 2");
}

void validate(const BoundsArgs& a) {
  require_probability(a.epsilon, "--epsilon");
  require_source(a.k, a.p);
  require_method_domain(a.method, a.epsilon);
}

void validate(const PacketBoundsArgs& a) {
  require_probability(a.delta, "--delta");
  require(a.packet_bits >= 1, "--packet-size must be >= 1");
  require_source(a.k, a.p);
  require_method_domain(a.method, epsilon_from_delta(a.delta, a.packet_bits));
}

void validate(const SweepArgs& a) {
  require_probability(a.min, "sweep minimum");
  require_probability(a.max, "sweep maximum");
  require(a.points >= 1, "--points must be >= 1");
  require(a.points == 1 || a.min < a.max, "sweep minimum must be below maximum");
  require(!a.packet_sizes.empty(), "--packet-sizes must not be empty");
  for (long p : a.packet_sizes) require(p >= 1, "packet sizes must be >= 1");
  require_source(a.k, a.p);
}

void validate(const PlanArgs& a) {
  require_probability(a.delta, "--delta");
  require(a.R > 0.0 && std::isfinite(a.R), "--R must be > 0");
  require(a.max_distortion > 0.0, "--max-distortion must be > 0");
  require(a.p_max >= 1 && a.p_max <= 1'000'000, "--p-max must lie in [1, 1e6]");
  require_source(a.k, a.p);
  require_method_domain(a.method, a.delta);
}

Table cmd_exponents(const ExponentsArgs& a) {
  validate(a);
  const BecSpec bec(a.epsilon);
  const double rp = tangent_rate(bec);

  Table t;
  t.columns = {"r", "e_ex", "e_sp", "e_sl", "beyond_tangent", "findings"};
  base_meta(t, "exponents");
  t.meta.emplace_back("epsilon", a.epsilon);
  t.meta.emplace_back("capacity", bec.capacity());
  t.meta.emplace_back("r_prime", rp);
  t.meta.emplace_back("e_ex_zero", expurgated_zero_rate(bec));
  t.meta.emplace_back("e_sp_at_r_prime", sphere_packing_closed(rp, bec));
  t.meta.emplace_back("e_sl_slope", straight_line_slope(bec));
  if (bec.outside_small_erasure_regime()) t.meta.emplace_back("warning", std::string("outside_small_erasure_regime"));

  for (int i = 0; i < a.steps; ++i) {
    const double r = a.r_min + (a.r_max - a.r_min) * i / (a.steps - 1);
    const ExponentValue ex = expurgated_exponent(r, bec);
    const ExponentValue sp = sphere_packing_sup(r, bec);
    const bool beyond = r > rp;
    std::vector<std::string> findings;
    if (ex.vacuous) findings.emplace_back("e_ex_vacuous");
    if (sp.vacuous) findings.emplace_back("at_or_above_capacity");
    t.add_row({r, ex.value, sp.value, beyond ? Cell{} : Cell{straight_line_exponent(r, bec)},
               beyond ? 1.0 : 0.0, join(findings)});
  }
  return t;
}

namespace {

std::vector<Cell> bounds_cells(const RateBounds& b) {
  return {b.r_ex, b.r_sl, optional_cell(b.c_eps), b.capacity, join(b.findings)};
}

}  // namespace

Table cmd_bounds(const BoundsArgs& a) {
  validate(a);
  const BecSpec bec(a.epsilon);
  const SourceSpec src(a.k, a.p);
  const RateBounds b = compute_bounds(bec, src, a.method);

  Table t;
  t.columns = {"epsilon", "k", "p", "method", "r_ex", "r_sl", "c_eps", "capacity", "findings"};
  base_meta(t, "bounds");
  t.meta.emplace_back("method", std::string(to_string(a.method)));
  std::vector<Cell> row{a.epsilon, static_cast<double>(a.k), a.p, std::string(to_string(a.method))};
  for (auto& c : bounds_cells(b)) row.push_back(std::move(c));
  t.add_row(std::move(row));
  return t;
}

Table cmd_packet_bounds(const PacketBoundsArgs& a) {
  validate(a);
  const PacketSpec pkt(a.delta, a.packet_bits);
  const SourceSpec src(a.k, a.p);
  const RateBounds b = packet_rate_bounds(pkt, src, a.method);

  Table t;
  t.columns = {"delta", "packet_size", "epsilon", "k", "p", "method", "r_ex", "r_sl", "c_eps", "capacity", "findings"};
  base_meta(t, "packet-bounds");
  t.meta.emplace_back("method", std::string(to_string(a.method)));
  std::vector<Cell> row{a.delta, static_cast<double>(a.packet_bits), pkt.equivalent_bec().epsilon(),
                        static_cast<double>(a.k), a.p, std::string(to_string(a.method))};
  for (auto& c : bounds_cells(b)) row.push_back(std::move(c));
  t.add_row(std::move(row));
  return t;
}

Table cmd_sweep(const SweepArgs& a, Execution exec) {
  validate(a);
  const SourceSpec src(a.k, a.p);
  const std::vector<double> xs = spaced(a.min, a.max, a.points, a.spacing);

  struct Job {
    long packet_bits;
    double x;
  };
  std::vector<Job> jobs;
  for (long pb : a.packet_sizes)
    for (double x : xs) jobs.push_back({pb, x});

  // Per-row failures are captured in the row, so the map never throws.
  const auto rows = map_indexed<std::vector<Cell>>(exec, jobs.size(), [&](std::size_t i) {
    const Job& job = jobs[i];
    double delta = 0.0;
    double epsilon = 0.0;
    if (a.over == SweepOver::delta) {
      delta = job.x;
      epsilon = epsilon_from_delta(delta, job.packet_bits);
    } else {
      epsilon = job.x;
      delta = delta_from_epsilon(epsilon, job.packet_bits);
    }
    std::vector<Cell> row{static_cast<double>(job.packet_bits), delta, epsilon};
    try {
      if (a.method != Method::exact && epsilon >= 0.5)
        throw DomainError("method " + std::string(to_string(a.method)) + " needs eps < 0.5");
      const RateBounds b = compute_bounds(BecSpec(epsilon), src, a.method);
      row.insert(row.end(), {b.r_ex, b.r_sl, b.capacity, std::string{}, join(b.findings)});
    } catch (const std::exception& e) {
      row.insert(row.end(), {Cell{}, Cell{}, 1.0 - epsilon, std::string(e.what()), std::string{}});
    }
    return row;
  });

  Table t;
  t.columns = {"packet_size", "delta", "epsilon", "r_ex", "r_sl", "capacity", "error", "findings"};
  base_meta(t, "sweep");
  t.meta.emplace_back("sweep_over", std::string(a.over == SweepOver::delta ? "delta" : "epsilon"));
  t.meta.emplace_back("k", static_cast<double>(a.k));
  t.meta.emplace_back("p", a.p);
  t.meta.emplace_back("method", std::string(to_string(a.method)));
  for (const auto& row : rows) t.add_row(row);
  return t;
}

Table cmd_packet_plan(const PlanArgs& a, Execution exec) {
  validate(a);
  const SourceSpec src(a.k, a.p);
  const PlanRequest req{a.delta, a.R, a.max_distortion, a.p_max, a.method, a.regime};
  const PacketPlan plan = min_packet_length(req, src, exec);

  Table t;
  t.columns = {"packet_size", "epsilon", "rate", "distortion", "meets_limit", "findings"};
  base_meta(t, "packet-plan");
  t.meta.emplace_back("delta", a.delta);
  t.meta.emplace_back("R", a.R);
  t.meta.emplace_back("k", static_cast<double>(a.k));
  t.meta.emplace_back("p", a.p);
  t.meta.emplace_back("max_distortion", a.max_distortion);
  t.meta.emplace_back("p_max", static_cast<double>(a.p_max));
  t.meta.emplace_back("method", std::string(to_string(a.method)));
  t.meta.emplace_back("regime", std::string(to_string(a.regime)));
  t.meta.emplace_back("p_min", plan.p_min ? Cell{static_cast<double>(*plan.p_min)} : Cell{});
  t.meta.emplace_back("achievable", std::string(plan.achievable() ? "true" : "false"));
  for (const PlanRow& r : plan.table) {
    t.add_row({static_cast<double>(r.packet_bits), r.epsilon, r.rate, r.distortion,
               r.distortion <= a.max_distortion ? 1.0 : 0.0, std::string{}});
  }
  return t;
}

Table cmd_verify(const verification::VerifyOptions& opts, bool& passed) {
  const verification::VerifyReport report = verification::run_verification(opts);
  passed = report.all_passed();

  Table t;
  t.columns = {"group", "max_deviation", "tolerance", "passed", "findings"};
  base_meta(t, "verify");
  t.meta.emplace_back("grid_points", static_cast<double>(opts.grid_points));
  if (opts.fault_group) t.meta.emplace_back("fault_group", *opts.fault_group);
  t.meta.emplace_back("all_passed", std::string(passed ? "true" : "false"));
  for (const auto& g : report.groups)
    t.add_row({g.name, g.max_deviation, g.tolerance, g.passed ? 1.0 : 0.0, g.detail});
  return t;
}

std::optional<ChartSpec> default_chart(const std::string& command) {
  if (command == "exponents")
    return ChartSpec{"r", {"e_ex", "e_sp", "e_sl"}, std::nullopt, false, false, "Error exponents"};
  if (command == "sweep")
    return ChartSpec{"delta", {"r_ex", "r_sl"}, "packet_size", true, false, "Channel-code rate bounds"};
  if (command == "packet-plan")
    return ChartSpec{"packet_size", {"distortion"}, std::nullopt, true, true, "Distortion vs packet length"};
  return std::nullopt;
}

}  // namespace jscc::cli
