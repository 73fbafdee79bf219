#include <doctest.h>

#include "growthopt/linalg.hpp"
#include "growthopt/rng.hpp"

using namespace growthopt;

TEST_SUITE("linalg") {
  TEST_CASE("vector kernels") {
    Vec a{1.0, 2.0, 3.0}, b{4.0, -5.0, 6.0};
    CHECK(dot(a, b) == doctest::Approx(12.0));
    CHECK(nrm2({3.0, 4.0}) == doctest::Approx(5.0));
    CHECK(add(a, b) == Vec{5.0, -3.0, 9.0});
    CHECK(sub(a, b) == Vec{-3.0, 7.0, -3.0});
    CHECK(scale(2.0, a) == Vec{2.0, 4.0, 6.0});
    CHECK(axpy(a, -2.0, b) == Vec{-7.0, 12.0, -9.0});
  }

  TEST_CASE("matrix shape validation") {
    CHECK_THROWS_AS(Matrix(2, 2, {1.0, 2.0, 3.0}), std::invalid_argument);
    Matrix A(2, 3, {1, 2, 3, 4, 5, 6});
    CHECK(A(1, 2) == 6.0);
    CHECK_THROWS_AS(matvec(A, Vec{1.0, 2.0}), std::invalid_argument);
    CHECK_THROWS_AS(matvec_t(A, Vec{1.0, 2.0, 3.0}), std::invalid_argument);
  }

  TEST_CASE("matvec and transpose") {
    Matrix A(2, 3, {1, 2, 3, 4, 5, 6});
    CHECK(matvec(A, {1.0, 1.0, 1.0}) == Vec{6.0, 15.0});
    CHECK(matvec_t(A, {1.0, 1.0}) == Vec{5.0, 7.0, 9.0});
    CHECK(row(A, 1) == Vec{4.0, 5.0, 6.0});
  }

  TEST_CASE("cholesky solve") {
    Matrix H(2, 2, {4, 2, 2, 3});
    Matrix L = cholesky(H);
    Vec x = cholesky_solve(L, {2.0, 5.0});
    CHECK(x[0] == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(x[1] == doctest::Approx(2.0).epsilon(1e-12));
  }

  TEST_CASE("cholesky rejects indefinite input") {
    CHECK_THROWS_AS(cholesky(Matrix(2, 2, {1, 2, 2, 1})), std::domain_error);
  }

  TEST_CASE("extreme eigenvalues of symmetric matrices") {
    CHECK(sym_lambda_max(Matrix(2, 2, {1, 0, 0, 4})) == doctest::Approx(4.0).epsilon(1e-8));
    CHECK(sym_lambda_max(Matrix(2, 2, {2, 1, 1, 2})) == doctest::Approx(3.0).epsilon(1e-8));
    CHECK(sym_lambda_min(Matrix(2, 2, {2, 1, 1, 2})) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(sym_lambda_max(Matrix(1, 1, {7.0})) == doctest::Approx(7.0));
    CHECK(sym_lambda_min(Matrix(1, 1, {7.0})) == doctest::Approx(7.0));
  }

  TEST_CASE("spectral norm squared") {
    CHECK(spectral_norm_sq(Matrix(2, 2, {1, 0, 0, 2})) == doctest::Approx(4.0).epsilon(1e-8));
    CHECK(spectral_norm_sq(Matrix(1, 2, {1, 1})) == doctest::Approx(2.0).epsilon(1e-8));
    // Rank-one 3x2: ||uv^T||_2^2 = ||u||^2 ||v||^2.
    Matrix A(3, 2, {1, 2, 2, 4, 3, 6});
    CHECK(spectral_norm_sq(A) == doctest::Approx(14.0 * 5.0).epsilon(1e-8));
  }

  TEST_CASE("eigenvalue bounds sandwich random quadratic forms") {
    SplitMix64 rng{42};
    Matrix S(3, 3);
    // Random symmetric diagonally dominant matrix.
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j <= i; ++j) {
        double v = rng.uniform(-1.0, 1.0);
        S(i, j) = v;
        S(j, i) = v;
      }
    for (std::size_t i = 0; i < 3; ++i) S(i, i) += 4.0;
    double lo = sym_lambda_min(S), hi = sym_lambda_max(S);
    CHECK(lo > 0.0);
    CHECK(lo <= hi);
    for (int t = 0; t < 200; ++t) {
      Vec v{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
      double n2 = dot(v, v);
      if (n2 == 0.0) continue;
      double q = dot(v, matvec(S, v)) / n2;
      CHECK(q >= lo - 1e-8);
      CHECK(q <= hi + 1e-8);
    }
  }

  TEST_CASE("splitmix64 is deterministic and in range") {
    SplitMix64 a{123}, b{123};
    for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
    SplitMix64 c{7};
    for (int i = 0; i < 1000; ++i) {
      double u = c.uniform(-2.0, 3.0);
      CHECK(u >= -2.0);
      CHECK(u < 3.0);
    }
  }
}
