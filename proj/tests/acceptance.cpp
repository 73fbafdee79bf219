// Acceptance gate: one pass/fail line per criterion, exit code = failures.
#include <cmath>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "growthopt/agm.hpp"
#include "growthopt/bounds.hpp"
#include "growthopt/catalog.hpp"
#include "growthopt/growth.hpp"
#include "growthopt/json_io.hpp"
#include "growthopt/linalg.hpp"
#include "growthopt/problem.hpp"
#include "growthopt/smoothing.hpp"
#include "growthopt/subgradient.hpp"

using namespace growthopt;

namespace {

struct Entry {
  const char* name;
  ProblemInstance p;
};

std::vector<Entry> nonsmooth_matrix() {
  std::vector<Entry> v;
  v.push_back({"abs1d", catalog::abs1d()});
  v.push_back({"asym1d", catalog::asym1d()});
  v.push_back({"linf2", catalog::linf2()});
  v.push_back({"l1_2d", catalog::l1_2d()});
  v.push_back({"seg2d", catalog::seg2d()});
  v.push_back({"linf5", catalog::linf5()});
  return v;
}

std::vector<Entry> smooth_matrix() {
  std::vector<Entry> v;
  v.push_back({"quad1d", catalog::quad1d()});
  v.push_back({"ls1d", catalog::ls1d()});
  v.push_back({"ridge1d", catalog::ridge1d()});
  v.push_back({"ls2d", catalog::ls2d()});
  v.push_back({"quad2d", catalog::quad2d()});
  return v;
}

// x0 at distance exactly dist0 from Opt: last coordinate for the non-smooth
// catalog (each Opt touches the origin there), first coordinate offset from
// the optimal point for the smooth catalog.
Vec nonsmooth_start(const ProblemInstance& p, double dist0) {
  Vec x(p.dimension, 0.0);
  x.back() = dist0;
  return x;
}

Vec smooth_start(const ProblemInstance& p, double dist0) {
  Vec x = p.metadata.opt.point;
  x[0] += dist0;
  return x;
}

std::int64_t budget_for(double bound) {
  return static_cast<std::int64_t>(2.0 * bound) + 64;
}

std::string fmt(const char* pattern, ...) {
  char buf[512];
  va_list args;
  va_start(args, pattern);
  std::vsnprintf(buf, sizeof(buf), pattern, args);
  va_end(args);
  return std::string(buf);
}

// ---- criterion 1: momentum coefficient recursion ----------------------------

std::string criterion1() {
  double theta = 1.0;
  for (int i = 0; i < 10000; ++i) {
    double next = theta_next(theta);
    if (i == 0 && std::fabs(next - 0.6180339887498949) > 1e-14)
      return fmt("theta_1 = %.17g, expected golden-ratio conjugate", next);
    double res = next * next - (1.0 - next) * theta * theta;
    double tol = 1e-12 * std::max(1.0, 1.0 / (next * next));
    if (std::fabs(res) > tol)
      return fmt("recursion residual %.3e at step %d exceeds %.3e", res, i + 1, tol);
    if (!(next < theta)) return fmt("theta not strictly decreasing at step %d", i + 1);
    double cap = 2.0 / (static_cast<double>(i) + 3.0);
    if (next > cap + 1e-15)
      return fmt("theta_%d = %.17g exceeds cap %.17g", i + 1, next, cap);
    theta = next;
  }
  return {};
}

// ---- criterion 2: averaged-iterate envelope, non-smooth matrix --------------

std::string criterion2() {
  for (const Entry& e : nonsmooth_matrix()) {
    for (double d : {10.0, 100.0, 1000.0}) {
      Vec x0 = nonsmooth_start(e.p, d);
      SolverRun run =
          run_subgradient(e.p, x0, StepSizeRule::constant_epsilon(1.0), 1500, std::nullopt);
      EnvelopeInputs in;
      in.M = *e.p.metadata.lipschitz_M;
      in.dist0 = d;
      in.f_star = *e.p.metadata.f_star;
      EnvelopeResult er = envelope_check(run, Envelope::T2i, in);
      if (!er.ok)
        return fmt("T2i violated on %s at dist0=%g (trace row %lld)", e.name, d,
                   static_cast<long long>(er.first_violation));
    }
  }
  return {};
}

// ---- criterion 3: distance envelope + T5 success, Polyak rule ---------------

std::string criterion3() {
  for (const Entry& e : nonsmooth_matrix()) {
    double f_star = *e.p.metadata.f_star;
    double M = *e.p.metadata.lipschitz_M;
    double G = *e.p.metadata.growth_G;
    double og = f_star - e.p.f_slb;
    for (double d : {10.0, 100.0, 1000.0}) {
      Vec x0 = nonsmooth_start(e.p, d);
      SolverRun run =
          run_subgradient(e.p, x0, StepSizeRule::polyak(f_star), 1200, std::nullopt);
      EnvelopeInputs in;
      in.M = M;
      in.dist0 = d;
      in.f_star = f_star;
      EnvelopeResult er = envelope_check(run, Envelope::T2ii, in);
      if (!er.ok)
        return fmt("T2ii violated on %s at dist0=%g (trace row %lld)", e.name, d,
                   static_cast<long long>(er.first_violation));
      double ratio0 = (e.p.objective(x0) - f_star) / og;
      for (double ep : {1.0, 0.1, 0.01}) {
        double b5 = bound_theorem5(M, G, ep, ratio0);
        SolverRun sr = run_subgradient(e.p, x0, StepSizeRule::polyak(f_star),
                                       budget_for(b5), StopRule{f_star, ep}, {false});
        if (!sr.success_iterates)
          return fmt("%s dist0=%g eps'=%g: no success within budget %lld", e.name, d, ep,
                     static_cast<long long>(budget_for(b5)));
        if (static_cast<double>(*sr.success_iterates) > b5 + 1e-9)
          return fmt("%s dist0=%g eps'=%g: observed %lld exceeds T5=%.6g", e.name, d, ep,
                     static_cast<long long>(*sr.success_iterates), b5);
      }
    }
  }
  return {};
}

// ---- criterion 4: accelerated envelope, smooth matrix ------------------------

std::string criterion4() {
  for (const Entry& e : smooth_matrix()) {
    double d = 10.0;
    Vec x0 = smooth_start(e.p, d);
    SolverRun run = run_agm(e.p, x0, *e.p.metadata.lipschitz_L, 600, std::nullopt);
    EnvelopeInputs in;
    in.L = *e.p.metadata.lipschitz_L;
    in.dist0 = d;
    in.f_star = *e.p.metadata.f_star;
    EnvelopeResult er = envelope_check(run, Envelope::T3, in);
    if (!er.ok)
      return fmt("T3 violated on %s (trace row %lld)", e.name,
                 static_cast<long long>(er.first_violation));
  }
  return {};
}

// ---- criterion 5: two-rate restart within T4, inner counts capped ------------

std::string criterion5() {
  RestartConfig3 cfg;
  double threshold = (1.0 + cfg.eps_bar_prime) / cfg.B;
  for (const Entry& e : nonsmooth_matrix()) {
    double f_star = *e.p.metadata.f_star;
    double M = *e.p.metadata.lipschitz_M;
    double G = *e.p.metadata.growth_G;
    double og = f_star - e.p.f_slb;
    for (double d : {10.0, 1000.0}) {
      Vec x0 = nonsmooth_start(e.p, d);
      double ratio0 = (e.p.objective(x0) - f_star) / og;
      for (double ep : {1.0, 0.1, 0.01}) {
        double b4 = bound_theorem4(M, G, ep, ratio0);
        SolverRun run = run_two_rate_restart(e.p, x0, ep, budget_for(b4), f_star, {false});
        if (!run.success_iterates)
          return fmt("%s dist0=%g eps'=%g: no success within budget %lld", e.name, d, ep,
                     static_cast<long long>(budget_for(b4)));
        if (static_cast<double>(*run.success_iterates) > b4 + 1e-9)
          return fmt("%s dist0=%g eps'=%g: observed %lld exceeds T4=%.6g", e.name, d, ep,
                     static_cast<long long>(*run.success_iterates), b4);
        CapsAlg3 caps = diagnostics_caps_alg3(M, G, ep, cfg);
        for (const RestartEvent& ev : run.restarts) {
          double ratio_i = (ev.start_gap - og) / og;
          if (ratio_i > threshold && ev.K > caps.V)
            return fmt("%s dist0=%g eps'=%g outer %lld: K=%lld exceeds V=%lld at ratio %.3g",
                       e.name, d, ep, static_cast<long long>(ev.outer),
                       static_cast<long long>(ev.K), static_cast<long long>(caps.V), ratio_i);
        }
      }
    }
  }
  return {};
}

// ---- criterion 6: parametric smoothing within T6, sandwich + curvature -------

std::string criterion6() {
  for (const Entry& e : nonsmooth_matrix()) {
    SmoothingFamily fam = make_entropy_family(e.p);
    double f_star = *e.p.metadata.f_star;
    double G = *e.p.metadata.growth_G;
    double og = f_star - e.p.f_slb;
    double d = 10.0;
    Vec x0 = nonsmooth_start(e.p, d);
    double ratio0 = (e.p.objective(x0) - f_star) / og;
    for (double ep : {1.0, 0.1}) {
      double b6 = bound_theorem6(G, fam.A_bar, fam.D_bar, ep, ratio0);
      SolverRun run =
          run_parametric_smoothing_restart(fam, x0, ep, budget_for(b6), f_star, {false});
      if (!run.success_iterates)
        return fmt("%s eps'=%g: no success within budget %lld", e.name, ep,
                   static_cast<long long>(budget_for(b6)));
      if (static_cast<double>(*run.success_iterates) > b6 + 1e-9)
        return fmt("%s eps'=%g: observed %lld exceeds T6=%.6g", e.name, ep,
                   static_cast<long long>(*run.success_iterates), b6);
      for (double mu : run.mus_used) {
        ProblemInstance s = fam.make_smoothed(mu);
        double l_mu = fam.A_bar / mu;
        Vec prev;
        Vec prev_grad;
        for (int j = 0; j <= 20; ++j) {
          Vec x = scale((j - 10.0) / 10.0, x0);
          double fs = s.objective(x);
          double fb = e.p.objective(x);
          if (fs > fb + 1e-9 || fs < fb - mu * fam.D_bar - 1e-9)
            return fmt("%s eps'=%g mu=%.6g: sandwich violated at sample %d", e.name, ep, mu, j);
          Vec g = s.first_order(x);
          if (j > 0) {
            double lhs = nrm2(sub(g, prev_grad));
            double rhs = l_mu * (1.0 + 1e-6) * nrm2(sub(x, prev)) + 1e-12;
            if (lhs > rhs)
              return fmt("%s eps'=%g mu=%.6g: gradient curvature above A_bar/mu at sample %d",
                         e.name, ep, mu, j);
          }
          prev = x;
          prev_grad = g;
        }
      }
    }
  }
  return {};
}

// ---- criterion 7: restarted accelerated method within T7, halving restarts ---

std::string criterion7() {
  for (const Entry& e : smooth_matrix()) {
    double f_star = *e.p.metadata.f_star;
    double L = *e.p.metadata.lipschitz_L;
    double G = *e.p.metadata.growth_G;
    double og = f_star - e.p.f_slb;
    for (double d : {10.0, 100.0}) {
      Vec x0 = smooth_start(e.p, d);
      double f0_gap = e.p.objective(x0) - e.p.f_slb;
      for (double ep : {1.0, 0.1, 0.01}) {
        double b7 = bound_theorem7(G, L, f0_gap, og, ep);
        SolverRun run =
            run_agm_simple_restart(e.p, x0, L, ep, budget_for(b7), f_star, {false});
        if (!run.success_iterates)
          return fmt("%s dist0=%g eps'=%g: no success within budget %lld", e.name, d, ep,
                     static_cast<long long>(budget_for(b7)));
        if (static_cast<double>(*run.success_iterates) > b7 + 1e-9)
          return fmt("%s dist0=%g eps'=%g: observed %lld exceeds T7=%.6g", e.name, d, ep,
                     static_cast<long long>(*run.success_iterates), b7);
        for (std::size_t i = 1; i < run.restarts.size(); ++i) {
          double factor = run.restarts[i].start_gap / run.restarts[i - 1].start_gap;
          if (!(factor < 0.5 + 1e-12))
            return fmt("%s dist0=%g eps'=%g: restart %zu contracted by %.6g >= 0.5", e.name,
                       d, ep, i, factor);
        }
      }
    }
  }
  return {};
}

// ---- criterion 8: adjoint smoothing within T8, mu = 0 identity ----------------

std::string criterion8() {
  struct BoxCase {
    const char* name;
    ProblemInstance p;
  };
  std::vector<BoxCase> cases;
  cases.push_back({"adj3x2", catalog::adj3x2()});
  cases.push_back({"adj4x3", catalog::adj4x3()});
  for (const BoxCase& c : cases) {
    SmoothingFamily fam = make_adjoint_family(c.p);
    double f_star = *c.p.metadata.f_star;
    double G = *c.p.metadata.growth_G;
    double og = f_star - c.p.f_slb;
    Vec lower = c.p.metadata.opt.point;  // adjoint boxes are minimized at the lower corner
    Vec upper = c.p.projector(Vec(c.p.dimension, 1e9));
    Vec x0 = upper;
    double f0 = c.p.objective(x0);
    double ratio0 = (f0 - f_star) / og;
    for (double ep : {0.5, 0.1}) {
      double b8 = bound_theorem8(G, fam.A_bar, fam.D_bar, ep, ratio0, og);
      SolverRun run =
          run_parametric_smoothing_restart(fam, x0, ep, budget_for(b8), f_star, {false});
      if (!run.success_iterates)
        return fmt("%s eps'=%g: no success within budget %lld", c.name, ep,
                   static_cast<long long>(budget_for(b8)));
      if (static_cast<double>(*run.success_iterates) > b8 + 1e-9)
        return fmt("%s eps'=%g: observed %lld exceeds T8=%.6g", c.name, ep,
                   static_cast<long long>(*run.success_iterates), b8);
    }
    ProblemInstance zero = fam.make_smoothed(0.0);
    int per_axis = c.p.dimension == 2 ? 10 : 5;
    std::vector<int> idx(c.p.dimension, 0);
    while (true) {
      Vec x(c.p.dimension, 0.0);
      for (std::size_t i = 0; i < c.p.dimension; ++i)
        x[i] = lower[i] + (upper[i] - lower[i]) * idx[i] / (per_axis - 1.0);
      if (std::fabs(zero.objective(x) - c.p.objective(x)) > 1e-12)
        return fmt("%s: mu=0 objective differs from base at a lattice point", c.name);
      std::size_t k = 0;
      while (k < idx.size() && ++idx[k] == per_axis) idx[k++] = 0;
      if (k == idx.size()) break;
    }
  }
  return {};
}

// ---- criterion 9: growth estimate diverges on the unbounded family -----------

std::string criterion9() {
  ProblemInstance p = make_counterexample_problem();
  double last = 0.0;
  for (double range : {10.0, 100.0, 1000.0}) {
    SamplingPlan plan;
    plan.seed = 17;
    plan.random_count = 400;
    plan.range = range;
    plan.curve_count = 64;
    plan.curve = counterexample_witness;
    GrowthCertificate cert = estimate_growth_constant(p, plan);
    if (!(cert.g_lower > last))
      return fmt("g_lower %.6g at range %g did not increase past %.6g", cert.g_lower, range,
                 last);
    last = cert.g_lower;
  }
  if (last < 500.0 * (1.0 - 1e-12))
    return fmt("g_lower at range 1000 is %.6g, expected at least 500", last);
  return {};
}

// ---- criterion 10: restart bounds overtake classical bounds ------------------

std::string criterion10() {
  const double ep = 0.01;
  const std::vector<double> dists = {10.0, 100.0, 1000.0, 10000.0};
  auto check = [&](const char* label, const std::vector<double>& ratios) -> std::string {
    for (std::size_t i = 1; i < ratios.size(); ++i)
      if (!(ratios[i] < ratios[i - 1]))
        return fmt("%s ratio not decreasing at dist0=%g (%.6g -> %.6g)", label, dists[i],
                   ratios[i - 1], ratios[i]);
    if (!(ratios.back() < 1.0))
      return fmt("%s ratio %.6g at dist0=10^4 not below 1", label, ratios.back());
    return {};
  };

  // abs1d: ratio0 = f(x0) = dist0, opt gap 1, eps_abs = ep * opt gap.
  std::vector<double> r_subgrad;
  for (double d : dists)
    r_subgrad.push_back(bound_theorem4(1.0, 1.0, ep, d) /
                        bound_standard_subgradient(1.0, d, ep));
  if (std::string s = check("T4/Eq8", r_subgrad); !s.empty()) return s;

  ProblemInstance l1 = catalog::l1_2d();
  SmoothingFamily fam = make_entropy_family(l1);
  std::vector<double> r_smooth;
  for (double d : dists)
    r_smooth.push_back(bound_theorem6(*l1.metadata.growth_G, fam.A_bar, fam.D_bar, ep, d) /
                       bound_standard_smoothing(fam.A_bar, fam.D_bar, d, ep));
  if (std::string s = check("T6/Eq17", r_smooth); !s.empty()) return s;

  ProblemInstance q = catalog::quad1d();
  std::vector<double> r_agm;
  for (double d : dists) {
    double f0_gap = 0.5 * d * d - q.f_slb;
    r_agm.push_back(bound_theorem7(*q.metadata.growth_G, *q.metadata.lipschitz_L, f0_gap,
                                   *q.metadata.f_star - q.f_slb, ep) /
                    bound_standard_agm(*q.metadata.lipschitz_L, d, ep,
                                       *q.metadata.f_star - q.f_slb));
  }
  if (std::string s = check("T7/Eq25", r_agm); !s.empty()) return s;
  return {};
}

// ---- criterion 11: CLI reruns are byte-identical ------------------------------

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string criterion11() {
  namespace fs = std::filesystem;
  const std::string ws = "/tmp/growthopt_acceptance";
  fs::remove_all(ws);
  fs::create_directories(ws + "/a");
  fs::create_directories(ws + "/b");
  save_problem_file(catalog::abs1d(), ws + "/absprob.json");
  save_problem_file(catalog::ls2d(), ws + "/lsprob.json");
  {
    std::ofstream cfg(ws + "/sdm.json");
    cfg << "{\"problem\": \"" << ws << "/absprob.json\", \"algorithm\": \"alg3\",\n"
        << " \"eps_prime\": 0.25, \"budget\": 4000, \"x0\": [7.0], \"seed\": 3}\n";
    std::ofstream cfg2(ws + "/agm.json");
    cfg2 << "{\"problem\": \"" << ws << "/lsprob.json\", \"algorithm\": \"agm\",\n"
         << " \"eps_prime\": 0.1, \"budget\": 3000, \"x0\": [5.0, -3.0], \"seed\": 9}\n";
  }
  for (const char* stem : {"sdm", "agm"}) {
    for (const char* out : {"a", "b"}) {
      std::string cmd = "GROWTHOPT_OUT=" + ws + "/" + out + " " + GROWTHOPT_BIN + " run " +
                        ws + "/" + stem + ".json > /dev/null 2>&1";
      int rc = std::system(cmd.c_str());
      if (rc != 0) return fmt("CLI run %s into %s exited with %d", stem, out, rc);
    }
    std::string base = std::string(stem);
    std::string ta = slurp(ws + "/a/" + base + "_trace.csv");
    std::string tb = slurp(ws + "/b/" + base + "_trace.csv");
    if (ta.empty() || ta != tb) return fmt("%s traces differ between reruns", stem);
    std::string ra = slurp(ws + "/a/" + base + "_report.json");
    std::string rb = slurp(ws + "/b/" + base + "_report.json");
    if (ra.empty() || ra != rb) return fmt("%s reports differ between reruns", stem);
  }
  return {};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* text;
    std::function<std::string()> fn;
  };
  const std::vector<Criterion> criteria = {
      {1, "momentum coefficient recursion stays exact over 10^4 steps", criterion1},
      {2, "averaged-iterate envelope holds across the non-smooth matrix", criterion2},
      {3, "distance envelope holds and Polyak runs succeed within T5", criterion3},
      {4, "accelerated envelope holds across the smooth matrix", criterion4},
      {5, "two-rate restart succeeds within T4 with inner counts capped by V", criterion5},
      {6, "parametric smoothing succeeds within T6 with valid sandwich and curvature",
       criterion6},
      {7, "restarted accelerated method succeeds within T7 and halves every restart",
       criterion7},
      {8, "adjoint smoothing succeeds within T8 and mu=0 reproduces the base objective",
       criterion8},
      {9, "growth estimates diverge on the unbounded-growth family", criterion9},
      {10, "relative-scale bounds overtake classical bounds as distance grows", criterion10},
      {11, "CLI reruns of a fixed config and seed are byte-identical", criterion11},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    std::string why;
    try {
      why = c.fn();
    } catch (const std::exception& ex) {
      why = fmt("exception: %s", ex.what());
    }
    if (why.empty()) {
      std::printf("[PASS] criterion %2d: %s\n", c.id, c.text);
    } else {
      ++failures;
      std::printf("[FAIL] criterion %2d: %s (%s)\n", c.id, c.text, why.c_str());
    }
  }
  return failures;
}
