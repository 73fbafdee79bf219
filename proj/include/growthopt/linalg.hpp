#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace growthopt {

using Vec = std::vector<double>;

// Dense row-major matrix. Problem sizes here are small (n <= 100, m <= 200),
// so no sparse or blocked paths.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}
  Matrix(std::size_t r, std::size_t c, std::vector<double> d)
      : rows(r), cols(c), data(std::move(d)) {
    if (data.size() != rows * cols) throw std::invalid_argument("matrix data size mismatch");
  }

  double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
  bool empty() const { return rows == 0 || cols == 0; }
};

inline double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double nrm2(const Vec& a) { return std::sqrt(dot(a, a)); }

inline Vec add(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vec scale(double c, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

// r = x + c*y
inline Vec axpy(const Vec& x, double c, const Vec& y) {
  Vec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + c * y[i];
  return r;
}

inline Vec matvec(const Matrix& A, const Vec& x) {
  if (A.cols != x.size()) throw std::invalid_argument("matvec shape mismatch");
  Vec r(A.rows, 0.0);
  for (std::size_t i = 0; i < A.rows; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < A.cols; ++j) s += A(i, j) * x[j];
    r[i] = s;
  }
  return r;
}

inline Vec matvec_t(const Matrix& A, const Vec& x) {
  if (A.rows != x.size()) throw std::invalid_argument("matvec_t shape mismatch");
  Vec r(A.cols, 0.0);
  for (std::size_t i = 0; i < A.rows; ++i)
    for (std::size_t j = 0; j < A.cols; ++j) r[j] += A(i, j) * x[i];
  return r;
}

inline Vec row(const Matrix& A, std::size_t i) {
  Vec r(A.cols);
  for (std::size_t j = 0; j < A.cols; ++j) r[j] = A(i, j);
  return r;
}

// Largest eigenvalue of a symmetric PSD matrix by power iteration.
// Deterministic start vector; relative tolerance 1e-10 on the Rayleigh quotient.
double sym_lambda_max(const Matrix& S);

// Smallest eigenvalue of a symmetric positive definite matrix by inverse power
// iteration with a Cholesky solve per step.
double sym_lambda_min(const Matrix& S);

// ||A||_2^2 = lambda_max(A^T A), without forming A^T A when applying.
double spectral_norm_sq(const Matrix& A);

// In-place lower Cholesky factor of a symmetric positive definite matrix.
// Throws std::domain_error when a pivot is not strictly positive.
Matrix cholesky(const Matrix& S);

// Solves L L^T x = b given the lower factor L.
Vec cholesky_solve(const Matrix& L, const Vec& b);

}  // namespace growthopt
