#include "growthopt/catalog.hpp"

#include <cmath>

namespace growthopt::catalog {

namespace {

// All non-smooth instances below use f_slb = -1 and f* = 0, so the gap at x
// is f(x) + 1 and each growth certificate is a one-line geometric fact.
ProblemInstance pwl(const Matrix& A, const Vec& b, double G, OptSet opt) {
  ProblemInstance p = make_piecewise_linear(A, b, FeasibleSet::full(A.cols));
  p.f_slb = -1.0;
  attach_f_star(p, 0.0);
  p.metadata.growth_G = G;
  p.metadata.opt = std::move(opt);
  return p;
}

}  // namespace

ProblemInstance abs1d() {
  // |x| = max(x, -x); dist = |x| <= f + 1.
  return pwl(Matrix(2, 1, {1.0, -1.0}), {0.0, 0.0}, 1.0, OptSet::at_point({0.0}));
}

ProblemInstance asym1d() {
  // max(2x, -x); dist = |x| and f >= |x| on x>0, f = |x| on x<0.
  return pwl(Matrix(2, 1, {2.0, -1.0}), {0.0, 0.0}, 1.0, OptSet::at_point({0.0}));
}

ProblemInstance linf2() {
  // max(|x1|, |x2|); dist = ||x||_2 <= sqrt(2) ||x||_inf.
  return pwl(Matrix(4, 2, {1, 0, -1, 0, 0, 1, 0, -1}), {0, 0, 0, 0}, std::sqrt(2.0),
             OptSet::at_point({0.0, 0.0}));
}

ProblemInstance l1_2d() {
  // |x1| + |x2| as a max over the four sign patterns; dist = ||x||_2 <= ||x||_1.
  return pwl(Matrix(4, 2, {1, 1, 1, -1, -1, 1, -1, -1}), {0, 0, 0, 0}, 1.0,
             OptSet::at_point({0.0, 0.0}));
}

ProblemInstance seg2d() {
  // max(|x1| - 1, |x2|); Opt is the segment [-1,1] x {0} and both distance
  // components are bounded by f, so dist <= sqrt(2) f <= sqrt(2)(f + 1).
  return pwl(Matrix(4, 2, {1, 0, -1, 0, 0, 1, 0, -1}), {-1, -1, 0, 0}, std::sqrt(2.0),
             OptSet::in_box({-1.0, 0.0}, {1.0, 0.0}));
}

ProblemInstance linf5() {
  Matrix A(10, 5);
  for (std::size_t i = 0; i < 5; ++i) {
    A(2 * i, i) = 1.0;
    A(2 * i + 1, i) = -1.0;
  }
  return pwl(A, Vec(10, 0.0), std::sqrt(5.0), OptSet::at_point(Vec(5, 0.0)));
}

namespace {

ProblemInstance ls(const Matrix& X, const Vec& y, double lambda, double f_slb) {
  ProblemInstance p = make_least_squares(X, y, lambda, 2, 2.0);
  p.f_slb = f_slb;
  certify_least_squares(p);
  return p;
}

}  // namespace

ProblemInstance quad1d() { return ls(Matrix(1, 1, {1.0}), {0.0}, 0.0, -1.0); }

ProblemInstance ls1d() { return ls(Matrix(2, 1, {1.0, 1.0}), {0.0, 2.0}, 0.0, 0.0); }

ProblemInstance ridge1d() { return ls(Matrix(1, 1, {1.0}), {2.0}, 1.0, 0.0); }

ProblemInstance ls2d() {
  return ls(Matrix(3, 2, {1, 0, 0, 1, 1, 1}), {0.0, 0.0, 3.0}, 0.0, 0.0);
}

ProblemInstance quad2d() { return ls(Matrix(2, 2, {1, 0, 0, 2}), {0.0, 0.0}, 0.0, -1.0); }

namespace {

// Softmax value function on a positive box with A > 0 entrywise: the objective
// is strictly increasing in every coordinate, so Opt = {lower corner} and
// dist(x, Opt) <= ||u - l|| gives the growth certificate
// G = ||u - l|| / (f* - f_slb).
ProblemInstance adjoint_box(const Matrix& A, const Vec& l, const Vec& u) {
  ProblemInstance p = make_softmax_box(A, Vec(A.rows, 0.0), FeasibleSet::make_box(l, u));
  p.f_slb = 0.0;
  attach_f_star(p, p.objective(l));
  p.metadata.opt = OptSet::at_point(l);
  p.metadata.growth_G = nrm2(sub(u, l)) / (*p.metadata.f_star - p.f_slb);
  return p;
}

}  // namespace

ProblemInstance adj3x2() {
  // Every row dots (0.5, 0.5) to 1.5, so f* = 1.5 exactly.
  return adjoint_box(Matrix(3, 2, {1.0, 2.0, 2.0, 1.0, 1.5, 1.5}), {0.5, 0.5}, {2.0, 2.0});
}

ProblemInstance adj4x3() {
  return adjoint_box(
      Matrix(4, 3, {1.0, 0.5, 0.2, 0.3, 1.0, 0.4, 0.2, 0.3, 1.0, 0.5, 0.5, 0.5}),
      {1.0, 1.0, 1.0}, {3.0, 3.0, 3.0});
}

}  // namespace growthopt::catalog
