#include "growthopt/agm.hpp"

#include <cmath>

#include "growthopt/constants.hpp"

namespace growthopt {

double theta_next(double theta_i) {
  // Positive root of 1/t^2 - 1/t = 1/theta_i^2 in (0, 1].
  return 2.0 / (1.0 + std::sqrt(1.0 + 4.0 / (theta_i * theta_i)));
}

AgmState agm_step(const ProblemInstance& problem, const AgmState& state, double L) {
  if (!(L > 0.0)) throw std::invalid_argument("L must be positive");
  const double th = state.theta;
  Vec y(state.x.size());
  for (std::size_t k = 0; k < y.size(); ++k) y[k] = (1.0 - th) * state.x[k] + th * state.z[k];
  Vec g = problem.first_order(y);
  Vec z_next = problem.projector(axpy(state.z, -1.0 / (th * L), g));
  Vec x_next(y.size());
  for (std::size_t k = 0; k < y.size(); ++k)
    x_next[k] = (1.0 - th) * state.x[k] + th * z_next[k];
  return {std::move(x_next), std::move(z_next), state.i + 1, theta_next(th)};
}

namespace {

bool meets(double f, double f_star, double f_slb, double eps_prime) {
  return f - f_star <= eps_prime * (f_star - f_slb);
}

}  // namespace

SolverRun run_agm(const ProblemInstance& problem, const Vec& x0, double L, std::int64_t budget,
                  const std::optional<StopRule>& stop, const RunOptions& opts) {
  if (!(L > 0.0)) throw std::invalid_argument("L must be positive");
  SolverRun run;
  AgmState state;
  state.x = problem.projector(x0);
  state.z = state.x;
  double fx = problem.objective(state.x);
  double f_best = fx;
  run.best_point = state.x;
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
    state = agm_step(problem, state, L);
    fx = problem.objective(state.x);
    ++run.iterates_computed;
    f_best = std::min(f_best, fx);
    if (fx < run.best_value) {
      run.best_value = fx;
      run.best_point = state.x;
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

SolverRun run_agm_simple_restart(const ProblemInstance& problem, const Vec& x0, double L,
                                 double eps_prime, std::int64_t budget,
                                 const std::optional<double>& f_star_stop,
                                 const RunOptions& opts) {
  if (!(L > 0.0)) throw std::invalid_argument("L must be positive");
  RelativeTolerance tol(eps_prime);
  const double B = constants::agm_restart_B;
  const double f_slb = problem.f_slb;

  SolverRun run;
  Vec x_start = problem.projector(x0);
  double f_cur = problem.objective(x_start);
  if (!(f_cur - f_slb > 0.0))
    throw std::invalid_argument("start gap must be positive (f_slb not strict?)");
  double f_best = f_cur;
  run.best_point = x_start;
  run.best_value = f_cur;

  auto record = [&](std::int64_t outer, std::int64_t inner, int restart) {
    f_best = std::min(f_best, f_cur);
    if (!opts.record_trace) return;
    TraceRecord t;
    t.outer = outer;
    t.inner = inner;
    t.iterate_count = run.iterates_computed;
    t.f = f_cur;
    t.f_best = f_best;
    t.restart = restart;
    run.trace.push_back(t);
  };
  auto note = [&](const Vec& x) -> bool {
    if (f_cur < run.best_value) {
      run.best_value = f_cur;
      run.best_point = x;
    }
    if (f_star_stop && !run.success_iterates &&
        meets(f_cur, *f_star_stop, f_slb, tol.eps_prime)) {
      run.success_iterates = run.iterates_computed;
      run.termination = Termination::tolerance_met;
      return true;
    }
    return false;
  };

  record(0, 0, 0);
  if (note(x_start)) return run;

  AgmState state{x_start, x_start, 0, 1.0};
  for (std::int64_t outer = 0;; ++outer) {
    const double gap0 = f_cur - f_slb;
    if (outer > 0) {
      record(outer, 0, 1);
      state = AgmState{state.x, state.x, 0, 1.0};  // theta resets at a restart
    }
    for (std::int64_t j = 0;; ++j) {
      if (f_cur - f_slb < B * gap0) {
        run.restarts.push_back({outer, j, run.iterates_computed, gap0, Stream::single});
        break;
      }
      if (run.iterates_computed >= budget) {
        run.termination = Termination::budget_exhausted;
        return run;
      }
      state = agm_step(problem, state, L);
      f_cur = problem.objective(state.x);
      ++run.iterates_computed;
      record(outer, j + 1, 0);
      if (note(state.x)) return run;
    }
  }
}

double bound_standard_agm(double L, double dist0, double eps_prime, double opt_gap) {
  return std::sqrt(2.0 * L) * dist0 / std::sqrt(eps_prime * opt_gap) - 1.0;
}

CapsAlg5 diagnostics_caps_alg5(double G, double L, double start_gap, double eps_prime,
                               double v) {
  if (!(G > 0.0) || !(L > 0.0) || !(start_gap > 0.0) || !(eps_prime > 0.0) || !(v > 0.0))
    throw std::invalid_argument("caps need positive inputs");
  CapsAlg5 caps;
  caps.J = static_cast<std::int64_t>(std::ceil(G * std::sqrt(2.0 * L * start_gap / v) - 1.0));
  caps.I = static_cast<std::int64_t>(
      std::ceil(G * std::sqrt(2.0 * L * start_gap / (v * eps_prime)) - 1.0));
  return caps;
}

}  // namespace growthopt
