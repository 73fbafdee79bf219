#include "growthopt/problem.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace growthopt {

OptSet OptSet::at_point(Vec p) {
  OptSet s;
  s.kind = Kind::point;
  s.point = std::move(p);
  return s;
}

OptSet OptSet::in_box(Vec lower, Vec upper) {
  OptSet s;
  s.kind = Kind::box;
  s.lower = std::move(lower);
  s.upper = std::move(upper);
  return s;
}

OptSet OptSet::ray() {
  OptSet s;
  s.kind = Kind::counterexample_ray;
  return s;
}

double OptSet::distance(const Vec& x) const {
  switch (kind) {
    case Kind::none:
      throw std::logic_error("no dist_to_opt oracle for this problem");
    case Kind::point:
      return nrm2(sub(x, point));
    case Kind::box: {
      double s = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        double d = std::max({lower[i] - x[i], x[i] - upper[i], 0.0});
        s += d * d;
      }
      return std::sqrt(s);
    }
    case Kind::counterexample_ray: {
      double dx = std::max(1.0 - x[0], 0.0);
      return std::hypot(dx, x[1]);
    }
  }
  return 0.0;
}

void attach_f_star(ProblemInstance& p, double f_star) {
  if (!(f_star > p.f_slb))
    throw std::invalid_argument("f_star must lie strictly above f_slb");
  p.metadata.f_star = f_star;
}

namespace {

std::size_t argmax_row(const Matrix& A, const Vec& b, const Vec& x) {
  std::size_t best = 0;
  double fv = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < A.rows; ++i) {
    double v = b[i];
    for (std::size_t j = 0; j < A.cols; ++j) v += A(i, j) * x[j];
    if (v > fv) {  // strict: ties keep the smallest index
      fv = v;
      best = i;
    }
  }
  return best;
}

}  // namespace

ProblemInstance make_piecewise_linear(const Matrix& A, const Vec& b, const FeasibleSet& set) {
  if (A.rows == 0) throw std::invalid_argument("piecewise-linear needs at least one piece");
  if (A.rows != b.size()) throw std::invalid_argument("A and b row count mismatch");
  if (set.kind != SetKind::full_space && set.dim != A.cols)
    throw std::invalid_argument("set dimension mismatch");

  ProblemInstance p;
  p.dimension = A.cols;
  p.kind = "piecewise_linear";
  p.A = A;
  p.b = b;
  p.set = set.dim == 0 && set.kind == SetKind::full_space ? FeasibleSet::full(A.cols) : set;
  p.f_slb = -1.0;
  p.objective = [A, b](const Vec& x) {
    double fv = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < A.rows; ++i) {
      double v = b[i];
      for (std::size_t j = 0; j < A.cols; ++j) v += A(i, j) * x[j];
      fv = std::max(fv, v);
    }
    return fv;
  };
  p.first_order = [A, b](const Vec& x) { return row(A, argmax_row(A, b, x)); };
  {
    FeasibleSet s = p.set;
    p.projector = [s](const Vec& x) { return s.project(x); };
  }
  double M = 0.0;
  for (std::size_t i = 0; i < A.rows; ++i) M = std::max(M, nrm2(row(A, i)));
  p.metadata.lipschitz_M = M;
  return p;
}

ProblemInstance make_counterexample_problem() {
  ProblemInstance p;
  p.dimension = 2;
  p.kind = "counterexample";
  const double inf = std::numeric_limits<double>::infinity();
  p.set = FeasibleSet::make_box({1.0, -inf}, {inf, inf});
  p.f_slb = -1.0;
  p.objective = [](const Vec& x) { return x[1] * x[1] / x[0]; };
  p.first_order = [](const Vec& x) {
    return Vec{-x[1] * x[1] / (x[0] * x[0]), 2.0 * x[1] / x[0]};
  };
  {
    FeasibleSet s = p.set;
    p.projector = [s](const Vec& x) { return s.project(x); };
  }
  p.metadata.f_star = 0.0;
  p.metadata.opt = OptSet::ray();
  return p;
}

Vec counterexample_witness(double t) { return Vec{t * t, t}; }

ProblemInstance make_least_squares(const Matrix& X, const Vec& y, double lambda, int p_norm,
                                   double r) {
  if (X.rows != y.size()) throw std::invalid_argument("X and y row count mismatch");
  if (lambda < 0.0) throw std::invalid_argument("lambda must be nonnegative");
  if (p_norm != 1 && p_norm != 2) throw std::invalid_argument("p_norm must be 1 or 2");
  if (r < 1.0) throw std::invalid_argument("r must be at least 1");

  ProblemInstance p;
  p.dimension = X.cols;
  p.kind = "least_squares";
  p.A = X;
  p.b = y;
  p.lambda = lambda;
  p.p_norm = p_norm;
  p.r_exp = r;
  p.set = FeasibleSet::full(X.cols);
  p.f_slb = 0.0;

  p.objective = [X, y, lambda, p_norm, r](const Vec& beta) {
    Vec res = sub(matvec(X, beta), y);
    double fit = 0.5 * dot(res, res);
    double nn = 0.0;
    if (p_norm == 2) {
      nn = nrm2(beta);
    } else {
      for (double e : beta) nn += std::abs(e);
    }
    return fit + lambda * std::pow(nn, r);
  };
  p.first_order = [X, y, lambda, p_norm, r](const Vec& beta) {
    Vec g = matvec_t(X, sub(matvec(X, beta), y));
    double nn = 0.0;
    if (p_norm == 2) {
      nn = nrm2(beta);
    } else {
      for (double e : beta) nn += std::abs(e);
    }
    if (lambda > 0.0 && nn > 0.0) {
      double coeff = lambda * r * std::pow(nn, r - 1.0);
      for (std::size_t i = 0; i < beta.size(); ++i) {
        double u = p_norm == 2 ? beta[i] / nn
                               : (beta[i] > 0.0 ? 1.0 : (beta[i] < 0.0 ? -1.0 : 0.0));
        g[i] += coeff * u;
      }
    }
    return g;
  };
  {
    FeasibleSet s = p.set;
    p.projector = [s](const Vec& x) { return s.project(x); };
  }
  return p;
}

void certify_least_squares(ProblemInstance& p) {
  if (p.kind != "least_squares") throw std::invalid_argument("not a least-squares instance");
  if (p.p_norm != 2 || p.r_exp != 2.0)
    throw std::invalid_argument("analytic certification needs p_norm=2, r=2");
  const Matrix& X = p.A;
  const std::size_t n = X.cols;
  Matrix H(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double s = i == j ? 2.0 * p.lambda : 0.0;
      for (std::size_t k = 0; k < X.rows; ++k) s += X(k, i) * X(k, j);
      H(i, j) = s;
    }
  Matrix L = cholesky(H);
  Vec beta_star = cholesky_solve(L, matvec_t(X, p.b));
  double f_star = p.objective(beta_star);
  attach_f_star(p, f_star);
  double lam_max = sym_lambda_max(H);
  double lam_min = sym_lambda_min(H);
  p.metadata.lipschitz_L = lam_max;
  // f - f* = 0.5 (x-b*)^T H (x-b*) >= 0.5 lam_min dist^2 gives
  // dist/(f - f_slb) <= 1/sqrt(2 lam_min (f* - f_slb)) for every x.
  p.metadata.growth_G = 1.0 / std::sqrt(2.0 * lam_min * (f_star - p.f_slb));
  p.metadata.opt = OptSet::at_point(beta_star);
}

ProblemInstance make_logistic(const Matrix& A, const Vec& labels, const FeasibleSet& set) {
  if (A.rows != labels.size()) throw std::invalid_argument("A and labels row count mismatch");
  for (double l : labels)
    if (l != 1.0 && l != -1.0) throw std::invalid_argument("labels must be +1 or -1");

  ProblemInstance p;
  p.dimension = A.cols;
  p.kind = "logistic";
  p.A = A;
  p.b = labels;
  p.set = set.kind == SetKind::full_space && set.dim == 0 ? FeasibleSet::full(A.cols) : set;
  p.f_slb = 0.0;
  const double m = static_cast<double>(A.rows);

  p.objective = [A, labels, m](const Vec& x) {
    double s = 0.0;
    for (std::size_t i = 0; i < A.rows; ++i) {
      double t = 0.0;
      for (std::size_t j = 0; j < A.cols; ++j) t += A(i, j) * x[j];
      t *= -labels[i];
      s += std::max(t, 0.0) + std::log1p(std::exp(-std::abs(t)));
    }
    return s / m;
  };
  p.first_order = [A, labels, m](const Vec& x) {
    Vec g(A.cols, 0.0);
    for (std::size_t i = 0; i < A.rows; ++i) {
      double t = 0.0;
      for (std::size_t j = 0; j < A.cols; ++j) t += A(i, j) * x[j];
      double sig = 1.0 / (1.0 + std::exp(labels[i] * t));
      double c = -labels[i] * sig / m;
      for (std::size_t j = 0; j < A.cols; ++j) g[j] += c * A(i, j);
    }
    return g;
  };
  {
    FeasibleSet s = p.set;
    p.projector = [s](const Vec& x) { return s.project(x); };
  }
  p.metadata.lipschitz_L = spectral_norm_sq(A) / (4.0 * m);
  return p;
}

ProblemInstance make_softmax_box(const Matrix& A, const Vec& b, const FeasibleSet& box) {
  if (A.rows != b.size()) throw std::invalid_argument("A and b row count mismatch");
  double eb = 0.0;
  for (double e : b) eb += std::exp(e);
  if (eb > static_cast<double>(A.rows) * (1.0 + 1e-12))
    throw std::invalid_argument("softmax shift too large: sum exp(b_i) must not exceed m");

  ProblemInstance p;
  p.dimension = A.cols;
  p.kind = "piecewise_linear";
  p.smoothing_kind = "adjoint_entropy";
  p.A = A;
  p.b = b;
  p.set = box;
  p.f_slb = 0.0;
  const double m = static_cast<double>(A.rows);

  p.objective = [A, b, m](const Vec& x) {
    Vec t = add(matvec(A, x), b);
    double mx = *std::max_element(t.begin(), t.end());
    double s = 0.0;
    for (double e : t) s += std::exp(e - mx);
    return mx + std::log(s / m);
  };
  p.first_order = [A, b](const Vec& x) {
    Vec t = add(matvec(A, x), b);
    double mx = *std::max_element(t.begin(), t.end());
    double s = 0.0;
    for (double& e : t) {
      e = std::exp(e - mx);
      s += e;
    }
    for (double& e : t) e /= s;
    return matvec_t(A, t);
  };
  {
    FeasibleSet s = p.set;
    p.projector = [s](const Vec& x) { return s.project(x); };
  }
  p.metadata.lipschitz_L = spectral_norm_sq(A);
  return p;
}

}  // namespace growthopt
