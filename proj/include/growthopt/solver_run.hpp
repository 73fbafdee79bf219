#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "growthopt/linalg.hpp"

namespace growthopt {

enum class Termination { tolerance_met, budget_exhausted, zero_subgradient };

enum class Stream { a, b, single };

// One trace row per tracked point. alpha and g_norm are filled only by
// subgradient runs: row k carries the step size used to leave x^k, which is
// what the running-sum convergence envelopes sum over.
struct TraceRecord {
  std::int64_t outer = 0;
  std::int64_t inner = 0;
  Stream stream = Stream::single;
  std::int64_t iterate_count = 0;
  double f = 0.0;
  double f_best = 0.0;  // cumulative per stream
  int restart = 0;
  double alpha = 0.0;
  double g_norm = 0.0;
};

struct RestartEvent {
  std::int64_t outer = 0;      // index of the outer iteration that just ended
  std::int64_t K = 0;          // inner iterations it ran
  std::int64_t iterates_at = 0;
  double start_gap = 0.0;      // f(x_{i,0}) - f_slb
  Stream fired = Stream::a;    // which stream tripped the ratio test
};

struct SolverRun {
  std::int64_t iterates_computed = 0;
  std::vector<TraceRecord> trace;
  Vec best_point;
  double best_value = std::numeric_limits<double>::infinity();
  Termination termination = Termination::budget_exhausted;
  std::vector<RestartEvent> restarts;

  // iterates_computed at the first point meeting the stop tolerance;
  // set only when a stop rule was supplied and met.
  std::optional<std::int64_t> success_iterates;

  // Smoothing parameters instantiated by parametric-smoothing runs, in order.
  std::vector<double> mus_used;
};

// Oracle-checked stopping: success when (f - f_star) <= eps_prime * (f_star - f_slb),
// evaluated on computed values with no added tolerance.
struct StopRule {
  double f_star = 0.0;
  double eps_prime = 0.0;
};

struct RunOptions {
  bool record_trace = true;
};

}  // namespace growthopt
