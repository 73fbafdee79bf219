#include "growthopt/linalg.hpp"

#include "growthopt/rng.hpp"

namespace growthopt {

namespace {

// Rayleigh-quotient power iteration with a fixed random start so results are
// reproducible bit-for-bit.
double power_iterate(const Matrix& S, bool invert, const Matrix& L_chol) {
  const std::size_t n = S.rows;
  SplitMix64 rng(0x5ca1ab1eULL);
  Vec v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = rng.uniform(0.5, 1.5);
  double nv = nrm2(v);
  for (auto& e : v) e /= nv;

  double prev = 0.0;
  for (int it = 0; it < 100000; ++it) {
    Vec w = invert ? cholesky_solve(L_chol, v) : matvec(S, v);
    double lam = dot(v, w);
    double nw = nrm2(w);
    if (nw == 0.0) return 0.0;
    for (auto& e : w) e /= nw;
    v = std::move(w);
    if (it > 0 && std::abs(lam - prev) <= 1e-10 * std::max(1.0, std::abs(lam)) && it >= 50)
      return lam;
    prev = lam;
  }
  return prev;
}

}  // namespace

double sym_lambda_max(const Matrix& S) {
  if (S.rows != S.cols) throw std::invalid_argument("lambda_max needs a square matrix");
  if (S.rows == 1) return S(0, 0);
  return power_iterate(S, false, Matrix());
}

double sym_lambda_min(const Matrix& S) {
  if (S.rows != S.cols) throw std::invalid_argument("lambda_min needs a square matrix");
  if (S.rows == 1) return S(0, 0);
  Matrix L = cholesky(S);
  double inv_lam = power_iterate(S, true, L);
  if (inv_lam <= 0.0) throw std::domain_error("matrix is not positive definite");
  return 1.0 / inv_lam;
}

double spectral_norm_sq(const Matrix& A) {
  // Power iteration on A^T A applied as two matvecs.
  const std::size_t n = A.cols;
  if (A.empty()) return 0.0;
  SplitMix64 rng(0x5ca1ab1eULL);
  Vec v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = rng.uniform(0.5, 1.5);
  double nv = nrm2(v);
  for (auto& e : v) e /= nv;

  double prev = 0.0;
  for (int it = 0; it < 100000; ++it) {
    Vec w = matvec_t(A, matvec(A, v));
    double lam = dot(v, w);
    double nw = nrm2(w);
    if (nw == 0.0) return 0.0;
    for (auto& e : w) e /= nw;
    v = std::move(w);
    if (it > 0 && std::abs(lam - prev) <= 1e-10 * std::max(1.0, std::abs(lam)) && it >= 50)
      return lam;
    prev = lam;
  }
  return prev;
}

Matrix cholesky(const Matrix& S) {
  if (S.rows != S.cols) throw std::invalid_argument("cholesky needs a square matrix");
  const std::size_t n = S.rows;
  Matrix L(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double s = S(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= L(i, k) * L(j, k);
      if (i == j) {
        if (s <= 0.0) throw std::domain_error("matrix is not positive definite");
        L(i, i) = std::sqrt(s);
      } else {
        L(i, j) = s / L(j, j);
      }
    }
  }
  return L;
}

Vec cholesky_solve(const Matrix& L, const Vec& b) {
  const std::size_t n = L.rows;
  Vec y(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = b[i];
    for (std::size_t k = 0; k < i; ++k) s -= L(i, k) * y[k];
    y[i] = s / L(i, i);
  }
  Vec x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    double s = y[ii];
    for (std::size_t k = ii + 1; k < n; ++k) s -= L(k, ii) * x[k];
    x[ii] = s / L(ii, ii);
  }
  return x;
}

}  // namespace growthopt
