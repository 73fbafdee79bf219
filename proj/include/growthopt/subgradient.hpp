#pragma once

#include <cstdint>
#include <optional>

#include "growthopt/constants.hpp"
#include "growthopt/problem.hpp"
#include "growthopt/solver_run.hpp"

namespace growthopt {

struct StepSizeRule {
  enum class Kind { constant_epsilon, polyak, normalized, fixed };
  Kind kind = Kind::fixed;
  double eps_abs = 0.0;  // constant_epsilon: alpha = eps_abs / ||g||^2
  double f_star = 0.0;   // polyak: alpha = (f(x) - f_star) / ||g||^2
  double R = 0.0;        // normalized: alpha = R / (sqrt(N+1) ||g||)
  std::int64_t N = 0;
  double alpha = 0.0;    // fixed

  static StepSizeRule constant_epsilon(double eps_abs);
  static StepSizeRule polyak(double f_star);
  static StepSizeRule normalized(double R, std::int64_t N);
  static StepSizeRule fixed(double alpha);
};

struct SdmStep {
  Vec x_next;
  Vec g;
  double alpha = 0.0;
  bool zero_subgradient = false;  // ||g|| = 0: x is optimal, step is a no-op
};

SdmStep sdm_step(const ProblemInstance& problem, const Vec& x, const StepSizeRule& rule);

// Projected subgradient iteration from x0 with the given rule. With a stop
// rule, terminates at the first iterate meeting the relative tolerance; a
// Polyak step of zero (f at or below f_star) also terminates as met.
SolverRun run_subgradient(const ProblemInstance& problem, const Vec& x0, const StepSizeRule& rule,
                          std::int64_t budget, const std::optional<StopRule>& stop,
                          const RunOptions& opts = {});

struct RestartConfig3 {
  double B = constants::two_rate_B;
  double F = constants::two_rate_F;
  double eps_bar_prime = constants::two_rate_eps_bar_prime;
  double eps_bar = constants::two_rate_eps_bar_prime / (1.0 + constants::two_rate_eps_bar_prime);
};

// Two simultaneous subgradient streams with rates eps and eps_bar, both
// restarted from whichever stream first drops its gap ratio below B. Two
// iterates are computed per inner iteration (stream a first, then b); the
// stream-a test has priority when both trip at the same inner index.
SolverRun run_two_rate_restart(const ProblemInstance& problem, const Vec& x0, double eps_prime,
                               std::int64_t budget, const std::optional<double>& f_star_stop,
                               const RunOptions& opts = {},
                               const RestartConfig3& config = {});

struct CapsAlg3 {
  std::int64_t U = 0;  // inner-loop cap for the eps stream
  std::int64_t V = 0;  // inner-loop cap for the eps_bar stream
};

CapsAlg3 diagnostics_caps_alg3(double M, double G, double eps_prime,
                               const RestartConfig3& config = {});

// 2 M^2 G^2 (1 + 2.9 ln(ratio) + 2.9 ln(1/eps') + 6.8/eps' + 2/eps'^2)
double bound_theorem5(double M, double G, double eps_prime, double f0_gap_ratio);

}  // namespace growthopt
