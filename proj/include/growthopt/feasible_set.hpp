#pragma once

#include <cstddef>

#include "growthopt/linalg.hpp"

namespace growthopt {

enum class SetKind { full_space, ball, box, simplex };

// Closed convex sets with exact projection formulas. Boxes admit +/-inf
// bounds, which also covers half-spaces such as {x : x1 >= 1}.
struct FeasibleSet {
  SetKind kind = SetKind::full_space;
  std::size_t dim = 0;

  Vec center;  // ball
  double radius = 0.0;

  Vec lower;  // box
  Vec upper;

  static FeasibleSet full(std::size_t dim);
  static FeasibleSet make_ball(Vec center, double radius);
  static FeasibleSet make_box(Vec lower, Vec upper);
  static FeasibleSet make_simplex(std::size_t dim);

  Vec project(const Vec& x) const;
  bool contains(const Vec& x, double tol = 1e-9) const;
};

Vec project(const FeasibleSet& set, const Vec& x);

}  // namespace growthopt
