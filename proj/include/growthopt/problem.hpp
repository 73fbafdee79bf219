#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

#include "growthopt/feasible_set.hpp"
#include "growthopt/linalg.hpp"

namespace growthopt {

// Optimal-set descriptions with analytic distance formulas. Distances to
// anything else would need a certified solver of their own, so problems
// without one of these shapes simply carry no dist_to_opt oracle.
struct OptSet {
  enum class Kind { none, point, box, counterexample_ray };
  Kind kind = Kind::none;
  Vec point;
  Vec lower, upper;

  static OptSet at_point(Vec p);
  static OptSet in_box(Vec lower, Vec upper);
  static OptSet ray();  // {(x1, 0) : x1 >= 1}

  double distance(const Vec& x) const;
};

struct Metadata {
  std::optional<double> f_star;
  std::optional<double> lipschitz_M;
  std::optional<double> lipschitz_L;
  std::optional<double> growth_G;
  OptSet opt;

  bool has_dist_to_opt() const { return opt.kind != OptSet::Kind::none; }
  double dist_to_opt(const Vec& x) const { return opt.distance(x); }
};

struct ProblemInstance {
  std::size_t dimension = 0;
  std::function<double(const Vec&)> objective;
  std::function<Vec(const Vec&)> first_order;  // subgradient or gradient
  FeasibleSet set;
  std::function<Vec(const Vec&)> projector;
  double f_slb = 0.0;
  Metadata metadata;

  // Serialization backing; interpretation depends on kind.
  std::string kind;  // piecewise_linear | least_squares | logistic | counterexample
  Matrix A;
  Vec b;
  double lambda = 0.0;  // least_squares regularization
  int p_norm = 2;
  double r_exp = 2.0;
  std::optional<std::string> smoothing_kind;  // entropy | adjoint_entropy
};

struct RelativeTolerance {
  double eps_prime;
  double eps;  // eps_prime / (1 + eps_prime)

  explicit RelativeTolerance(double ep) : eps_prime(ep), eps(ep / (1.0 + ep)) {
    if (!(ep > 0.0)) throw std::invalid_argument("eps_prime must be positive");
  }
};

// Validates strictness f_slb < f_star before attaching.
void attach_f_star(ProblemInstance& p, double f_star);

// f(x) = max_i (a_i^T x + b_i); subgradient is the smallest-index active row.
ProblemInstance make_piecewise_linear(const Matrix& A, const Vec& b, const FeasibleSet& set);

// f(x1, x2) = x2^2 / x1 on {x1 >= 1}; the growth ratio diverges along (t^2, t).
ProblemInstance make_counterexample_problem();

// Point on the divergence witness curve t -> (t^2, t).
Vec counterexample_witness(double t);

// f(beta) = 0.5 ||y - X beta||^2 + lambda ||beta||_p^r. No f_star is attached
// here; certification is a separate step.
ProblemInstance make_least_squares(const Matrix& X, const Vec& y, double lambda, int p_norm,
                                   double r);

// Attaches f_star / L / growth_G / opt for the smooth case p=2, r=2 by solving
// the normal equations (X^T X + 2 lambda I) beta = X^T y exactly.
void certify_least_squares(ProblemInstance& p);

// f(x) = (1/m) sum_i log(1 + exp(-b_i a_i^T x)), labels b_i in {-1, +1}.
ProblemInstance make_logistic(const Matrix& A, const Vec& labels, const FeasibleSet& set);

// Softmax value function f(x) = log((1/m) sum_i exp((Ax)_i + b_i)) on a box;
// the smooth objective whose extra-smoothing family is adjoint_entropy.
ProblemInstance make_softmax_box(const Matrix& A, const Vec& b, const FeasibleSet& box);

}  // namespace growthopt
