#pragma once

#include "growthopt/problem.hpp"

// Analytic test problems with certified f_star / M or L / growth_G / opt-set
// metadata. Every certificate here is a closed-form fact about the instance;
// the growth constants are valid upper bounds for the true supremum ratio.
namespace growthopt::catalog {

// ---- non-smooth, f_slb = -1, f* = 0 ----
ProblemInstance abs1d();    // |x|                      M=1, G=1
ProblemInstance asym1d();   // max(2x, -x)              M=2, G=1
ProblemInstance linf2();    // max(|x1|,|x2|)           M=1, G=sqrt(2)
ProblemInstance l1_2d();    // |x1|+|x2|                M=sqrt(2), G=1
ProblemInstance seg2d();    // max(|x1|-1, |x2|)        M=1, G=sqrt(2), Opt=[-1,1]x{0}
ProblemInstance linf5();    // max_i |x_i| on R^5       M=1, G=sqrt(5)

// ---- smooth least squares, certified via the normal equations ----
ProblemInstance quad1d();   // 0.5 x^2,    f_slb=-1     L=1, G=1/sqrt(2)
ProblemInstance ls1d();     // 2 samples,  f_slb=0      L=2, G=1/2,  f*=1
ProblemInstance ridge1d();  // ridge,      f_slb=0      L=3, G=1/sqrt(8), f*=4/3
ProblemInstance ls2d();     // 3x2 design, f_slb=0      L=3, G=1/sqrt(3), f*=3/2
ProblemInstance quad2d();   // 0.5(x1^2+4x2^2), f_slb=-1  L=4, G=1/sqrt(2)

// ---- softmax value functions on positive boxes (adjoint extra-smoothing) ----
// A entrywise positive makes f strictly increasing per coordinate, so the
// optimum is exactly the lower corner.
ProblemInstance adj3x2();   // 3x2, box [0.5,2]^2, f*=1.5
ProblemInstance adj4x3();   // 4x3, box [1,3]^3

}  // namespace growthopt::catalog
