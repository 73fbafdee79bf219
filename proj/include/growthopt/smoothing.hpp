#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "growthopt/problem.hpp"
#include "growthopt/solver_run.hpp"

namespace growthopt {

// A parametric family f_mu with the sandwich f - D_bar*mu <= f_mu <= f and a
// certified gradient Lipschitz constant per mu: A_bar/mu for the non-smooth
// construction, L/(1+mu) for adjoint extra-smoothing (A_bar then stores L).
struct SmoothingFamily {
  enum class Kind { nonsmooth_nesterov, adjoint_extra };
  ProblemInstance base;
  std::function<ProblemInstance(double)> make_smoothed;
  double D_bar = 0.0;
  double A_bar = 0.0;
  Kind kind = Kind::nonsmooth_nesterov;
};

// f(x) = max_{lam in simplex} { lam^T A x - d(lam) } with
// d(lam) = sum lam_i ln lam_i + ln m - lam^T b, strongly convex with sigma=1.
// Requires sum_i e^{b_i} <= m so that min_P d >= 0.
struct AdjointRepresentation {
  Matrix A;
  Vec b;
  double sigma = 1.0;
  double D_bar = 0.0;  // max_P d = ln m - min_i b_i
  double L = 0.0;      // ||A||^2 / sigma
};

AdjointRepresentation make_entropy_adjoint(const Matrix& A, const Vec& b);

// f_mu(x) = mu ln((1/m) sum_i exp((a_i^T x + b_i)/mu)), log-sum-exp stabilized.
// Metadata carries L_mu = A_bar/mu with A_bar = max_i ||a_i||^2.
ProblemInstance entropy_smooth_pwl(const Matrix& A, const Vec& b, double mu,
                                   const FeasibleSet& set = {});

// f_mu(x) = (1+mu) ln((1/m) sum_i exp((Ax)_i/(1+mu) + b_i)); mu = 0 reproduces
// the base objective exactly. Metadata carries L_mu = L/(1+mu).
ProblemInstance adjoint_extra_smooth(const AdjointRepresentation& rep, double mu,
                                     const FeasibleSet& set = {});

SmoothingFamily make_entropy_family(const ProblemInstance& pwl_base);
SmoothingFamily make_adjoint_family(const ProblemInstance& smooth_base);

// Parametric smoothing with restarts, B = 1/2 and t = 1/8: per outer iteration
// two accelerated streams run from the restart point on f_{mu1} and f_{mu2}
// with mu1 = t*gap/D_bar and mu2 = t*eps'*gap/D_bar; the ratio test watches
// the true f of the mu1 stream only, while best-so-far scans both streams'
// true f. Two iterates per inner iteration.
SolverRun run_parametric_smoothing_restart(const SmoothingFamily& family, const Vec& x0,
                                           double eps_prime, std::int64_t budget,
                                           const std::optional<double>& f_star_stop,
                                           const RunOptions& opts = {});

// G sqrt(L D_bar) (22.7 + 32.7 ln(1+ratio) + 32 sqrt(opt_gap/eps'))
double bound_theorem8(double G, double L, double D_bar, double eps_prime, double f0_gap_ratio,
                      double opt_gap);

// ceil(sqrt(8 A_bar D_bar) dist0 / eps_abs - 1)
double bound_standard_smoothing(double A_bar, double D_bar, double dist0, double eps_abs);

struct CapsAlg4 {
  std::int64_t T = 0;  // inner cap away from the final outer iterations
  std::int64_t U = 0;  // inner cap for the final outer iteration
};

CapsAlg4 diagnostics_caps_alg4(double G, double A_bar, double D_bar, double eps_prime, double t);

}  // namespace growthopt
