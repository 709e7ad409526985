// Acceptance suite: one PASS/FAIL line per criterion. Takes the path of the
// jscc CLI binary as its only argument (criterion 7 drives it as a subprocess).

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "jscc/distortion.hpp"
#include "jscc/exponents.hpp"
#include "jscc/packet_planner.hpp"
#include "jscc/rate_bounds.hpp"
#include "jscc/verification.hpp"

using namespace jscc;

namespace {

const std::vector<double> kExpEps{1e-4, 1e-3, 1e-2, 0.1, 0.25};
const std::vector<double> kBoundsEps{1e-6, 1e-4, 1e-3, 1e-2, 0.05, 0.1};
const std::vector<double> kPk{0.25, 0.5, 1.0, 2.0};

SourceSpec with_pk(double pk) { return SourceSpec(4, 4.0 * pk); }

// Collects the reasons a criterion failed; an empty list means pass.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  void within(double value, double target, double tol, const std::string& what) {
    std::ostringstream os;
    os.precision(12);
    os << what << ": " << value << " vs " << target << " (tol " << tol << ")";
    expect(std::abs(value - target) <= tol, os.str());
  }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::vector<std::string> failures_;
};

std::string num(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

// 1. Closed-form equivalence.
void closed_form_equivalence(Check& c) {
  double worst_sp = 0.0;
  double worst_gen = 0.0;
  for (double eps : kExpEps) {
    const BecSpec bec(eps);
    const double top = 0.95 * (1.0 - eps);
    for (int i = 0; i < 19; ++i) {
      const double r = 0.05 + (top - 0.05) * i / 18.0;
      worst_sp = std::max(worst_sp, std::abs(sphere_packing_closed(r, bec) - sphere_packing_sup(r, bec).value));
    }
    const ChannelMatrix ch = bec_matrix(bec);
    for (double rho : {0.5, 1.0, 2.0, 5.0, 10.0}) {
      worst_gen = std::max(worst_gen, std::abs(e0_general(rho, ch) -
                                               (rho - std::log2((1.0 - eps) + eps * std::exp2(rho)))));
      if (rho >= 1.0)
        worst_gen = std::max(worst_gen, std::abs(e_x_general(rho, ch) -
                                                 rho * (1.0 - std::log2(1.0 + std::pow(eps, 1.0 / rho)))));
    }
  }
  c.within(worst_sp, 0.0, 1e-6, "max |E_sp closed - sup|");
  c.within(worst_gen, 0.0, 1e-10, "max |generic - closed BEC|");
}

// 2. Capacity and tangency.
void capacity_and_tangency(Check& c) {
  for (double eps : kExpEps) {
    const BecSpec bec(eps);
    const std::string tag = " at eps=" + num(eps);
    c.within(sphere_packing_sup(bec.capacity(), bec).value, 0.0, 1e-9, "E_sp(1-eps) sup" + tag);
    c.within(sphere_packing_closed(bec.capacity(), bec), 0.0, 1e-9, "E_sp(1-eps) closed" + tag);

    const double rp = tangent_rate(bec);
    const double e0 = expurgated_zero_rate(bec);
    const double chord = (sphere_packing_closed(rp, bec) - e0) / rp;
    const double slope =
        verification::numeric_slope([&](double r) { return sphere_packing_closed(r, bec); }, rp, 1e-6);
    c.within(std::abs(slope - chord) / std::abs(chord), 0.0, 1e-4, "relative slope error" + tag);
    c.within(rp, 1.0 - std::exp2(e0 - std::log2(1.0 / eps)), 1e-12, "r' vs exponent form" + tag);
    c.within(rp, 1.0 - std::sqrt(eps), 1e-12, "r' vs 1 - sqrt(eps)" + tag);
    c.within(straight_line_exponent(0.0, bec), e0, 1e-12, "E_sl(0)" + tag);
    c.within(straight_line_exponent(rp, bec), sphere_packing_closed(rp, bec), 1e-12, "E_sl(r')" + tag);
  }
}

// 3. Derived fixtures at eps = 0.01, k = 4, p = 2, each re-derived by an oracle.
void derived_fixtures(Check& c, const verification::VerifyReport& report) {
  const BecSpec bec(0.01);
  const SourceSpec src(4, 2.0);
  c.within(solve_c_epsilon(bec, src).value, 1.452, 5e-3, "c_eps");
  c.within(r_ex_exact(bec, src), 0.702, 1e-2, "r_ex exact");
  c.within(r_ex_simplified(bec, src), 0.702, 1e-2, "r_ex simplified");
  c.within(r_sl_bound(bec, src), 0.839, 5e-3, "r_sl");
  c.within(sphere_packing_sup(0.9, bec).value, 0.2084, 1e-4, "E_sp(0.9)");
  c.within(expurgated_zero_rate(bec), 0.5 * std::log2(100.0), 1e-9, "E_ex(0)");
  for (const auto& g : report.groups) {
    if (g.name.rfind("fixture_", 0) == 0)
      c.expect(g.passed, "oracle re-derivation " + g.name + " failed: " + g.detail);
  }
}

// 4. Qualitative trends.
void monotonicity(Check& c) {
  for (double pk : kPk) {
    double prev_ex = 2.0;
    double prev_sl = 2.0;
    for (double eps : kBoundsEps) {
      const BecSpec bec(eps);
      const double ex = r_ex_exact(bec, with_pk(pk));
      const double sl = r_sl_bound(bec, with_pk(pk));
      const std::string tag = " eps=" + num(eps) + " p/k=" + num(pk);
      c.expect(ex <= prev_ex, "r_ex not nonincreasing in eps" + tag);
      c.expect(sl <= prev_sl, "r_sl not nonincreasing in eps" + tag);
      c.expect(ex < bec.capacity() && sl < bec.capacity(), "bound not below capacity" + tag);
      prev_ex = ex;
      prev_sl = sl;
    }
    const BecSpec tiny(1e-12);
    const BecSpec ref(1e-2);
    c.expect(r_ex_exact(tiny, with_pk(pk)) > r_ex_exact(ref, with_pk(pk)), "r_ex(1e-12) <= r_ex(1e-2)");
    c.expect(r_sl_bound(tiny, with_pk(pk)) > r_sl_bound(ref, with_pk(pk)), "r_sl(1e-12) <= r_sl(1e-2)");
  }
  c.expect(r_sl_bound(BecSpec(1e-12), with_pk(0.5)) > 0.97, "r_sl(1e-12) <= 0.97 at p/k=0.5");

  const SourceSpec src(4, 2.0);
  for (double delta : {1e-4, 1e-3, 1e-2}) {
    double prev_ex = 0.0;
    double prev_sl = 0.0;
    for (long P : {1L, 10L, 100L, 1000L}) {
      const RateBounds b = packet_rate_bounds(PacketSpec(delta, P), src);
      const std::string tag = " delta=" + num(delta) + " P=" + std::to_string(P);
      c.expect(b.r_ex >= prev_ex, "r_ex not nondecreasing in P" + tag);
      c.expect(b.r_sl >= prev_sl, "r_sl not nondecreasing in P" + tag);
      prev_ex = b.r_ex;
      prev_sl = b.r_sl;
    }
  }
}

// 5. Balance identity.
void balance(Check& c) {
  for (double eps : kBoundsEps) {
    for (double pk : kPk) {
      const BecSpec bec(eps);
      const SourceSpec src = with_pk(pk);
      const double r = r_ex_exact(bec, src);
      const DistortionBound d = distortion_upper(LinkSpec(10.0, r), src, bec);
      c.within(std::log2(d.quantizer_term) - std::log2(d.channel_term), 0.0, 1e-8,
               "log2 term gap eps=" + num(eps) + " p/k=" + num(pk));
      const DistortionBound opt = optimized_total_distortion(src, bec, 10.0);
      c.expect(opt.total == 2.0 * opt.channel_term, "optimized total is not twice the channel term");
    }
  }
}

// 6. Packet equivalence and the default packet plan.
void packet_equivalence(Check& c) {
  for (double eps : {1e-6, 1e-5, 1e-4, 1e-3, 1e-2, 0.1})
    for (long P : {1L, 10L, 100L, 1000L}) {
      const std::string tag = "round trip eps=" + num(eps) + " P=" + std::to_string(P);
      try {
        c.within(epsilon_from_delta(delta_from_epsilon(eps, P), P), eps, 1e-12, tag);
      } catch (const std::exception& e) {
        c.expect(false, tag + ": " + e.what());
      }
    }

  PlanRequest req;
  req.delta = 1e-3;
  req.R = 10.0;
  req.max_distortion = 2e-5;
  req.p_max = 2000;
  const PacketPlan plan = min_packet_length(req, SourceSpec(4, 2.0));
  bool monotone = true;
  for (std::size_t i = 1; i < plan.table.size(); ++i)
    monotone = monotone && plan.table[i].distortion <= plan.table[i - 1].distortion;
  c.expect(monotone, "distortion table not nonincreasing in P");
  const double d1000 = plan.table[999].distortion;
  const double d2000 = plan.table[1999].distortion;
  const double drop = (d1000 - d2000) / d1000;
  c.within(drop, 0.0, 0.01, "relative distortion drop P=1000 -> 2000 (D1000=" + num(d1000) +
                                 ", D2000=" + num(d2000) + ")");
}

int run(const std::string& cmd) {
  const int status = std::system(cmd.c_str());
  if (status == -1 || !WIFEXITED(status)) return -1;
  return WEXITSTATUS(status);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// 7. CLI determinism and verify exit codes.
void cli_behaviour(Check& c, const std::string& cli) {
  const auto dir = std::filesystem::temp_directory_path() / "jscc_acceptance";
  std::filesystem::create_directories(dir);
  const std::vector<std::pair<std::string, std::string>> commands{
      {"sweep", "sweep --points 9"},
      {"sweep_json", "sweep --points 9 --format json"},
      {"bounds", "bounds --epsilon 0.01 --k 4 --p 2 --method exact"},
      {"bounds_json", "bounds --epsilon 0.01 --k 4 --p 2 --method exact --format json"},
  };
  for (const auto& [name, args] : commands) {
    const auto a = dir / (name + "_1.out");
    const auto b = dir / (name + "_2.out");
    c.expect(run(cli + " " + args + " --out " + a.string()) == 0, name + ": first run failed");
    c.expect(run(cli + " " + args + " --out " + b.string()) == 0, name + ": second run failed");
    const std::string first = slurp(a);
    c.expect(!first.empty(), name + ": empty output");
    c.expect(first == slurp(b), name + ": outputs differ between runs");
  }
  const int clean = run(cli + " verify --out " + (dir / "verify.csv").string());
  c.expect(clean == 0, "verify on a correct build exited " + std::to_string(clean));
  const int faulted = run(cli + " verify --grid-points 20000 --inject-fault tangency_slope --out " +
                          (dir / "verify_fault.csv").string() + " 2>/dev/null");
  c.expect(faulted == 4, "verify with injected fault exited " + std::to_string(faulted));
  std::filesystem::remove_all(dir);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: jscc_acceptance <path-to-jscc-cli>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const verification::VerifyReport report = verification::run_verification();

  struct Criterion {
    const char* name;
    std::function<void(Check&)> body;
  };
  const std::vector<Criterion> criteria{
      {"1 closed-form equivalence", closed_form_equivalence},
      {"2 capacity and tangency", capacity_and_tangency},
      {"3 derived fixtures", [&](Check& c) { derived_fixtures(c, report); }},
      {"4 monotonicity and limits", monotonicity},
      {"5 balance identity", balance},
      {"6 packet equivalence and plan tail", packet_equivalence},
      {"7 CLI determinism and verify exit codes", [&](Check& c) { cli_behaviour(c, cli); }},
  };

  int failed = 0;
  for (const auto& crit : criteria) {
    Check check;
    try {
      crit.body(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const bool ok = check.failures().empty();
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << crit.name << '\n';
    for (const auto& f : check.failures()) std::cout << "       " << f << '\n';
    failed += ok ? 0 : 1;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << '/' << criteria.size()
            << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
