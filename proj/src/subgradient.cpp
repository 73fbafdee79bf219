#include "growthopt/subgradient.hpp"

#include <cmath>

namespace growthopt {

StepSizeRule StepSizeRule::constant_epsilon(double eps_abs) {
  if (!(eps_abs > 0.0)) throw std::invalid_argument("eps_abs must be positive");
  StepSizeRule r;
  r.kind = Kind::constant_epsilon;
  r.eps_abs = eps_abs;
  return r;
}

StepSizeRule StepSizeRule::polyak(double f_star) {
  StepSizeRule r;
  r.kind = Kind::polyak;
  r.f_star = f_star;
  return r;
}

StepSizeRule StepSizeRule::normalized(double R, std::int64_t N) {
  if (!(R > 0.0) || N < 0) throw std::invalid_argument("normalized rule needs R > 0, N >= 0");
  StepSizeRule r;
  r.kind = Kind::normalized;
  r.R = R;
  r.N = N;
  return r;
}

StepSizeRule StepSizeRule::fixed(double alpha) {
  if (!(alpha >= 0.0)) throw std::invalid_argument("fixed step must be nonnegative");
  StepSizeRule r;
  r.kind = Kind::fixed;
  r.alpha = alpha;
  return r;
}

SdmStep sdm_step(const ProblemInstance& problem, const Vec& x, const StepSizeRule& rule) {
  SdmStep st;
  st.g = problem.first_order(x);
  double gn2 = dot(st.g, st.g);
  if (gn2 == 0.0) {
    st.x_next = x;
    st.zero_subgradient = true;
    return st;
  }
  switch (rule.kind) {
    case StepSizeRule::Kind::constant_epsilon:
      st.alpha = rule.eps_abs / gn2;
      break;
    case StepSizeRule::Kind::polyak:
      // A certified f_star can only sit below f(x); clamp guards against a
      // miscertified one driving the step negative.
      st.alpha = std::max(problem.objective(x) - rule.f_star, 0.0) / gn2;
      break;
    case StepSizeRule::Kind::normalized:
      st.alpha = rule.R / (std::sqrt(static_cast<double>(rule.N + 1)) * std::sqrt(gn2));
      break;
    case StepSizeRule::Kind::fixed:
      st.alpha = rule.alpha;
      break;
  }
  st.x_next = problem.projector(axpy(x, -st.alpha, st.g));
  return st;
}

namespace {

bool meets(double f, double f_star, double f_slb, double eps_prime) {
  return f - f_star <= eps_prime * (f_star - f_slb);
}

}  // namespace

SolverRun run_subgradient(const ProblemInstance& problem, const Vec& x0, const StepSizeRule& rule,
                          std::int64_t budget, const std::optional<StopRule>& stop,
                          const RunOptions& opts) {
  SolverRun run;
  Vec x = problem.projector(x0);
  double fx = problem.objective(x);
  double f_best = fx;
  run.best_point = x;
  run.best_value = fx;

  auto record = [&](std::int64_t inner) {
    if (!opts.record_trace) return;
    TraceRecord t;
    t.inner = inner;
    t.iterate_count = run.iterates_computed;
    t.f = fx;
    t.f_best = f_best;
    run.trace.push_back(t);
  };
  record(0);
  if (stop && meets(fx, stop->f_star, problem.f_slb, stop->eps_prime)) {
    run.success_iterates = 0;
    run.termination = Termination::tolerance_met;
    return run;
  }

  while (run.iterates_computed < budget) {
    SdmStep st = sdm_step(problem, x, rule);
    if (st.zero_subgradient) {
      run.termination = Termination::zero_subgradient;
      if (stop && !run.success_iterates) run.success_iterates = run.iterates_computed;
      return run;
    }
    if (rule.kind == StepSizeRule::Kind::polyak && st.alpha == 0.0) {
      // f(x) is at or below f_star: already optimal to certification accuracy.
      run.termination = Termination::tolerance_met;
      if (stop && !run.success_iterates) run.success_iterates = run.iterates_computed;
      return run;
    }
    if (opts.record_trace && !run.trace.empty()) {
      run.trace.back().alpha = st.alpha;
      run.trace.back().g_norm = std::sqrt(dot(st.g, st.g));
    }
    x = std::move(st.x_next);
    fx = problem.objective(x);
    ++run.iterates_computed;
    f_best = std::min(f_best, fx);
    if (fx < run.best_value) {
      run.best_value = fx;
      run.best_point = x;
    }
    record(run.iterates_computed);
    if (stop && meets(fx, stop->f_star, problem.f_slb, stop->eps_prime)) {
      run.success_iterates = run.iterates_computed;
      run.termination = Termination::tolerance_met;
      return run;
    }
  }
  run.termination = Termination::budget_exhausted;
  return run;
}

SolverRun run_two_rate_restart(const ProblemInstance& problem, const Vec& x0, double eps_prime,
                               std::int64_t budget, const std::optional<double>& f_star_stop,
                               const RunOptions& opts, const RestartConfig3& config) {
  RelativeTolerance tol(eps_prime);
  const double eps = tol.eps;
  const double eps_bar = config.eps_bar;
  const double B = config.B;
  const double F = config.F;
  const double f_slb = problem.f_slb;

  SolverRun run;
  Vec x_start = problem.projector(x0);
  double f_start = problem.objective(x_start);
  if (!(f_start - f_slb > 0.0))
    throw std::invalid_argument("start gap must be positive (f_slb not strict?)");

  run.best_point = x_start;
  run.best_value = f_start;
  double f_best_a = f_start;
  double f_best_b = std::numeric_limits<double>::infinity();

  auto record = [&](std::int64_t outer, std::int64_t inner, Stream s, double f, int restart) {
    double& fb = s == Stream::b ? f_best_b : f_best_a;
    fb = std::min(fb, f);
    if (!opts.record_trace) return;
    TraceRecord t;
    t.outer = outer;
    t.inner = inner;
    t.stream = s;
    t.iterate_count = run.iterates_computed;
    t.f = f;
    t.f_best = fb;
    t.restart = restart;
    run.trace.push_back(t);
  };
  auto note = [&](const Vec& x, double f) -> bool {
    if (f < run.best_value) {
      run.best_value = f;
      run.best_point = x;
    }
    if (f_star_stop && !run.success_iterates &&
        meets(f, *f_star_stop, f_slb, eps_prime)) {
      run.success_iterates = run.iterates_computed;
      run.termination = Termination::tolerance_met;
      return true;
    }
    return false;
  };

  record(0, 0, Stream::a, f_start, 0);
  if (note(x_start, f_start)) return run;

  Vec xa = x_start, xb = x_start;
  double fa = f_start, fb = f_start;
  for (std::int64_t outer = 0;; ++outer) {
    const double gap0 = fa - f_slb;  // both streams restart from the same point
    if (outer > 0) {
      record(outer, 0, Stream::a, fa, 1);
      xb = xa;
      fb = fa;
    }
    for (std::int64_t j = 1;; ++j) {
      if (run.iterates_computed >= budget) {
        run.termination = Termination::budget_exhausted;
        return run;
      }
      Vec ga = problem.first_order(xa);
      double na2 = dot(ga, ga);
      if (na2 == 0.0) {
        run.termination = Termination::zero_subgradient;
        if (f_star_stop && !run.success_iterates) run.success_iterates = run.iterates_computed;
        return run;
      }
      xa = problem.projector(axpy(xa, -eps * gap0 / (F * na2), ga));
      fa = problem.objective(xa);
      ++run.iterates_computed;
      record(outer, j, Stream::a, fa, 0);
      if (note(xa, fa)) return run;

      if (run.iterates_computed >= budget) {
        run.termination = Termination::budget_exhausted;
        return run;
      }
      Vec gb = problem.first_order(xb);
      double nb2 = dot(gb, gb);
      if (nb2 == 0.0) {
        run.termination = Termination::zero_subgradient;
        if (f_star_stop && !run.success_iterates) run.success_iterates = run.iterates_computed;
        return run;
      }
      xb = problem.projector(axpy(xb, -eps_bar * gap0 / (F * nb2), gb));
      fb = problem.objective(xb);
      ++run.iterates_computed;
      record(outer, j, Stream::b, fb, 0);
      if (note(xb, fb)) return run;

      // Restart tests, stream a first on simultaneous failure.
      if (fa - f_slb < B * gap0) {
        run.restarts.push_back({outer, j, run.iterates_computed, gap0, Stream::a});
        break;
      }
      if (fb - f_slb < B * gap0) {
        run.restarts.push_back({outer, j, run.iterates_computed, gap0, Stream::b});
        xa = xb;
        fa = fb;
        break;
      }
    }
  }
}

CapsAlg3 diagnostics_caps_alg3(double M, double G, double eps_prime,
                               const RestartConfig3& config) {
  if (!(M > 0.0) || !(G > 0.0)) throw std::invalid_argument("M and G must be positive");
  RelativeTolerance tol(eps_prime);
  double denom_core = config.B - 1.0 / (2.0 * config.F);
  double mg = config.F * M * M * G * G;
  CapsAlg3 caps;
  caps.U = static_cast<std::int64_t>(std::floor(mg / (2.0 * tol.eps * tol.eps * denom_core)));
  caps.V = static_cast<std::int64_t>(
      std::floor(mg / (2.0 * config.eps_bar * config.eps_bar * denom_core)));
  return caps;
}

double bound_theorem5(double M, double G, double eps_prime, double f0_gap_ratio) {
  using namespace constants;
  return t5_outer * M * M * G * G *
         (1.0 + t5_log * std::log(f0_gap_ratio) + t5_log * std::log(1.0 / eps_prime) +
          t5_inv / eps_prime + t5_inv_sq / (eps_prime * eps_prime));
}

}  // namespace growthopt
