#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "growthopt/solver_run.hpp"

namespace growthopt {

// 18 M^2 G^2 (2.7 ln(1+ratio) + ((1+eps')/eps')^2)
double bound_theorem4(double M, double G, double eps_prime, double f0_gap_ratio);

// 23 G sqrt(A_bar D_bar) (1 + 1.42 ln(1+ratio) + 2/eps')
double bound_theorem6(double G, double A_bar, double D_bar, double eps_prime,
                      double f0_gap_ratio);

// G sqrt(L) (10 sqrt(f0_gap) + 12 sqrt(opt_gap) / sqrt(eps'))
double bound_theorem7(double G, double L, double f0_gap, double opt_gap, double eps_prime);

// Relaxed form with the start gap split through sqrt(a+b) <= sqrt(a)+sqrt(b):
// G sqrt(L) (10 sqrt(opt_gap) + 10 sqrt(L/2) dist0 + 12 sqrt(opt_gap/eps')).
// Dominates bound_theorem7 whenever f0_gap <= opt_gap + (L/2) dist0^2.
double bound_theorem7_relaxed(double G, double L, double opt_gap, double dist0,
                              double eps_prime);

// M^2 dist0^2 / eps_abs^2 - 1 (classical rate, no growth information)
double bound_standard_subgradient(double M, double dist0, double eps_abs);

struct BoundReport {
  std::string theorem;  // T4 | T5 | T6 | T7 | T8 | Eq8 | Eq17 | Eq25
  std::map<std::string, double> inputs;
  double theoretical = 0.0;
  std::int64_t observed = 0;
  bool satisfied = false;
};

BoundReport make_report(const std::string& theorem, const std::map<std::string, double>& inputs,
                        double theoretical, std::int64_t observed);

// Evaluates the named bound from its named inputs (see evaluate_bound) and
// pairs it with the run's first-success iterate count. Throws
// std::runtime_error when the run never met its stop rule.
BoundReport compare_report(const SolverRun& run, const std::string& theorem,
                           const std::map<std::string, double>& inputs);

// Named-input dispatch shared by compare_report and the bench table:
//   T4:   M, G, eps_prime, f0_gap_ratio
//   T5:   M, G, eps_prime, f0_gap_ratio
//   T6:   G, A_bar, D_bar, eps_prime, f0_gap_ratio
//   T7:   G, L, f0_gap, opt_gap, eps_prime
//   T8:   G, L, D_bar, eps_prime, f0_gap_ratio, opt_gap
//   Eq8:  M, dist0, eps_abs
//   Eq17: A_bar, D_bar, dist0, eps_abs
//   Eq25: L, dist0, eps_prime, opt_gap
double evaluate_bound(const std::string& theorem, const std::map<std::string, double>& inputs);

enum class Envelope { T2i, T2ii, T3 };

struct EnvelopeInputs {
  double M = 0.0;
  double dist0 = 0.0;
  double L = 0.0;
  double f_star = 0.0;
};

struct EnvelopeResult {
  bool ok = true;
  std::int64_t first_violation = -1;  // trace index, -1 when ok
};

// Pointwise guarantee checks along a single-stream trace, slack >= -1e-9:
//   T2i : f_best^k <= f* + (dist0^2 + M^2 sum alpha^2) / (2 sum alpha)
//   T2ii: f_best^k <= f* + M dist0 / sqrt(k+1)
//   T3  : f(x^k)   <= f* + 2 L dist0^2 / (k+1)^2
EnvelopeResult envelope_check(const SolverRun& run, Envelope envelope,
                              const EnvelopeInputs& inputs);

}  // namespace growthopt
