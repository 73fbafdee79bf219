#include "growthopt/feasible_set.hpp"

#include <algorithm>
#include <limits>

namespace growthopt {

FeasibleSet FeasibleSet::full(std::size_t dim) {
  FeasibleSet s;
  s.kind = SetKind::full_space;
  s.dim = dim;
  return s;
}

FeasibleSet FeasibleSet::make_ball(Vec center, double radius) {
  if (radius < 0.0) throw std::invalid_argument("ball radius must be nonnegative");
  FeasibleSet s;
  s.kind = SetKind::ball;
  s.dim = center.size();
  s.center = std::move(center);
  s.radius = radius;
  return s;
}

FeasibleSet FeasibleSet::make_box(Vec lower, Vec upper) {
  if (lower.size() != upper.size()) throw std::invalid_argument("box bound size mismatch");
  for (std::size_t i = 0; i < lower.size(); ++i)
    if (lower[i] > upper[i]) throw std::invalid_argument("box has empty interval");
  FeasibleSet s;
  s.kind = SetKind::box;
  s.dim = lower.size();
  s.lower = std::move(lower);
  s.upper = std::move(upper);
  return s;
}

FeasibleSet FeasibleSet::make_simplex(std::size_t dim) {
  if (dim == 0) throw std::invalid_argument("simplex needs positive dimension");
  FeasibleSet s;
  s.kind = SetKind::simplex;
  s.dim = dim;
  return s;
}

Vec FeasibleSet::project(const Vec& x) const {
  switch (kind) {
    case SetKind::full_space:
      return x;
    case SetKind::ball: {
      Vec d = sub(x, center);
      double n = nrm2(d);
      if (n <= radius) return x;
      return axpy(center, radius / n, d);
    }
    case SetKind::box: {
      Vec r(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) r[i] = std::clamp(x[i], lower[i], upper[i]);
      return r;
    }
    case SetKind::simplex: {
      // Sort-and-threshold: find the largest k keeping u_k above the water
      // level, then clip.
      Vec u = x;
      std::sort(u.begin(), u.end(), std::greater<double>());
      double cum = 0.0, tau = 0.0;
      for (std::size_t k = 0; k < u.size(); ++k) {
        cum += u[k];
        double t = (cum - 1.0) / static_cast<double>(k + 1);
        if (u[k] - t > 0.0) tau = t;
      }
      Vec r(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) r[i] = std::max(x[i] - tau, 0.0);
      return r;
    }
  }
  return x;
}

bool FeasibleSet::contains(const Vec& x, double tol) const {
  switch (kind) {
    case SetKind::full_space:
      return true;
    case SetKind::ball:
      return nrm2(sub(x, center)) <= radius + tol;
    case SetKind::box:
      for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] < lower[i] - tol || x[i] > upper[i] + tol) return false;
      return true;
    case SetKind::simplex: {
      double s = 0.0;
      for (double e : x) {
        if (e < -tol) return false;
        s += e;
      }
      return std::abs(s - 1.0) <= tol;
    }
  }
  return false;
}

Vec project(const FeasibleSet& set, const Vec& x) { return set.project(x); }

}  // namespace growthopt
