#pragma once

#include <cstdint>
#include <optional>

#include "growthopt/problem.hpp"
#include "growthopt/solver_run.hpp"

namespace growthopt {

// Unique root in (0,1] of 1/t^2 - 1/t = 1/theta_i^2.
double theta_next(double theta_i);

struct AgmState {
  Vec x;
  Vec z;
  std::int64_t i = 0;
  double theta = 1.0;
};

// y = (1-theta) x + theta z;  z+ = proj(z - grad f(y) / (theta L));
// x+ = (1-theta) x + theta z+.
AgmState agm_step(const ProblemInstance& problem, const AgmState& state, double L);

SolverRun run_agm(const ProblemInstance& problem, const Vec& x0, double L, std::int64_t budget,
                  const std::optional<StopRule>& stop, const RunOptions& opts = {});

// Restarted accelerated method: one inner stream per outer iteration, advanced
// while the gap ratio stays at or above B = 1/2, then restarted from the
// current main iterate with theta reset to 1. One iterate per inner iteration.
SolverRun run_agm_simple_restart(const ProblemInstance& problem, const Vec& x0, double L,
                                 double eps_prime, std::int64_t budget,
                                 const std::optional<double>& f_star_stop,
                                 const RunOptions& opts = {});

// sqrt(2L) dist0 / sqrt(eps' opt_gap) - 1
double bound_standard_agm(double L, double dist0, double eps_prime, double opt_gap);

struct CapsAlg5 {
  std::int64_t J = 0;  // inner cap while far from tolerance
  std::int64_t I = 0;  // inner cap for the final outer iteration
};

// Analysis-only caps; v is a proof parameter, not used by the runner.
CapsAlg5 diagnostics_caps_alg5(double G, double L, double start_gap, double eps_prime,
                               double v = 0.25);

}  // namespace growthopt
