#include "growthopt/growth.hpp"

#include "growthopt/rng.hpp"

namespace growthopt {

GrowthCertificate estimate_growth_constant(const ProblemInstance& problem,
                                           const SamplingPlan& plan) {
  if (!problem.metadata.has_dist_to_opt())
    throw std::invalid_argument("problem has no dist_to_opt oracle");
  std::size_t curve_n = plan.curve ? plan.curve_count : 0;
  if (plan.random_count + curve_n == 0) throw std::invalid_argument("invalid sampler: zero samples");

  GrowthCertificate cert;
  auto consider = [&](const Vec& x) {
    double gap = problem.objective(x) - problem.f_slb;
    if (!(gap > 0.0)) return;  // strictness of f_slb makes this unreachable on Q
    double ratio = problem.metadata.dist_to_opt(x) / gap;
    ++cert.sample_count;
    if (ratio > cert.g_lower) {
      cert.g_lower = ratio;
      cert.witness = x;
    }
  };

  SplitMix64 rng(plan.seed);
  for (std::size_t s = 0; s < plan.random_count; ++s) {
    Vec x(problem.dimension);
    for (auto& e : x) e = rng.uniform(-plan.range, plan.range);
    consider(problem.projector(x));
  }

  if (curve_n == 1) {
    consider(problem.projector(plan.curve(plan.range)));
  } else {
    for (std::size_t s = 0; s < curve_n; ++s) {
      double t = 1.0 + (plan.range - 1.0) * static_cast<double>(s) /
                           static_cast<double>(curve_n - 1);
      consider(problem.projector(plan.curve(t)));
    }
  }
  return cert;
}

}  // namespace growthopt
