#pragma once

#include <cstdint>
#include <functional>

#include "growthopt/problem.hpp"

namespace growthopt {

// Random feasible points are drawn uniformly from [-range, range]^n with a
// splitmix64 stream and projected onto Q; a prefix of the stream is shared by
// any two plans with the same seed, so certificates grow monotonically with
// random_count. The optional curve adds deterministic samples at curve_count
// points spaced evenly over [1, range], endpoints included.
struct SamplingPlan {
  std::uint64_t seed = 0;
  std::size_t random_count = 0;
  double range = 1.0;
  std::size_t curve_count = 0;
  std::function<Vec(double)> curve;
};

struct GrowthCertificate {
  double g_lower = 0.0;       // largest sampled ratio dist(x,Opt) / (f(x) - f_slb)
  std::size_t sample_count = 0;
  Vec witness;                // point attaining g_lower
};

// Throws std::invalid_argument when the problem lacks a dist_to_opt oracle or
// the plan draws zero samples.
GrowthCertificate estimate_growth_constant(const ProblemInstance& problem,
                                           const SamplingPlan& plan);

}  // namespace growthopt
