#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "nestcx/errors.hpp"

namespace nestcx::linalg {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

template <typename T>
using Matrix = std::vector<std::vector<T>>;

// Fraction-free elimination (Bareiss). Intermediate entries are minors of
// the input matrix, so every division below is exact and integer callers
// can bound entry growth by Hadamard's inequality.

template <typename T>
T determinant(Matrix<T> a) {
  const int n = int(a.size());
  if (n == 0) return T(1);
  T prev(1);
  int sign = 1;
  for (int k = 0; k < n; k++) {
    int piv = -1;
    for (int r = k; r < n; r++)
      if (a[r][k] != 0) { piv = r; break; }
    if (piv < 0) return T(0);
    if (piv != k) { std::swap(a[piv], a[k]); sign = -sign; }
    for (int i = k + 1; i < n; i++) {
      for (int j = k + 1; j < n; j++)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = T(0);
    }
    prev = a[k][k];
  }
  T det = a[n - 1][n - 1];
  if (sign < 0) det = -det;
  return det;
}

template <typename T>
int rank_of(Matrix<T> a) {
  const int m = int(a.size());
  const int n = m == 0 ? 0 : int(a[0].size());
  T prev(1);
  int r = 0;
  for (int c = 0; c < n && r < m; c++) {
    int piv = -1;
    for (int i = r; i < m; i++)
      if (a[i][c] != 0) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(a[piv], a[r]);
    for (int i = r + 1; i < m; i++) {
      for (int j = c + 1; j < n; j++)
        a[i][j] = (a[i][j] * a[r][c] - a[i][c] * a[r][j]) / prev;
      a[i][c] = T(0);
    }
    prev = a[r][c];
    r++;
  }
  return r;
}

/// Solves the square system a x = rhs exactly; nullopt when a is singular.
template <typename T>
std::optional<std::vector<Rational>> solve_square(Matrix<T> a, std::vector<T> rhs) {
  const int n = int(a.size());
  T prev(1);
  for (int k = 0; k < n; k++) {
    int piv = -1;
    for (int r = k; r < n; r++)
      if (a[r][k] != 0) { piv = r; break; }
    if (piv < 0) return std::nullopt;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      std::swap(rhs[piv], rhs[k]);
    }
    for (int i = k + 1; i < n; i++) {
      for (int j = k + 1; j < n; j++)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      rhs[i] = (rhs[i] * a[k][k] - a[i][k] * rhs[k]) / prev;
      a[i][k] = T(0);
    }
    prev = a[k][k];
  }
  std::vector<Rational> x(n);
  for (int i = n - 1; i >= 0; i--) {
    Rational acc(rhs[i]);
    for (int j = i + 1; j < n; j++) acc -= Rational(a[i][j]) * x[j];
    x[i] = acc / Rational(a[i][i]);
  }
  return x;
}

/// Solves the rectangular system a x = rhs. Returns the unique solution, or
/// nullopt when the system is inconsistent or the columns are dependent.
inline std::optional<std::vector<Rational>> solve_unique(Matrix<Rational> a,
                                                         std::vector<Rational> rhs) {
  const int m = int(a.size());
  const int k = m == 0 ? 0 : int(a[0].size());
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < k && r < m; c++) {
    int piv = -1;
    for (int i = r; i < m; i++)
      if (a[i][c] != 0) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(a[piv], a[r]);
    std::swap(rhs[piv], rhs[r]);
    for (int i = 0; i < m; i++) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c] / a[r][c];
      for (int j = c; j < k; j++) a[i][j] -= f * a[r][j];
      rhs[i] -= f * rhs[r];
    }
    pivot_col.push_back(c);
    r++;
  }
  if (r < k) return std::nullopt;
  for (int i = r; i < m; i++)
    if (rhs[i] != 0) return std::nullopt;
  std::vector<Rational> x(k);
  for (int i = 0; i < r; i++) x[pivot_col[i]] = rhs[i] / a[i][pivot_col[i]];
  return x;
}

/// Inverse of an integer matrix with determinant +-1. Throws when the
/// matrix is singular or the inverse is not integral.
inline Matrix<Int> unimodular_inverse(const Matrix<Int>& m) {
  const int n = int(m.size());
  Matrix<Rational> a(n, std::vector<Rational>(2 * n));
  for (int i = 0; i < n; i++) {
    for (int j = 0; j < n; j++) a[i][j] = Rational(m[i][j]);
    a[i][n + i] = 1;
  }
  for (int k = 0; k < n; k++) {
    int piv = -1;
    for (int r = k; r < n; r++)
      if (a[r][k] != 0) { piv = r; break; }
    if (piv < 0) throw Error(Errc::singular_system, "matrix is singular");
    std::swap(a[piv], a[k]);
    Rational d = a[k][k];
    for (int j = k; j < 2 * n; j++) a[k][j] /= d;
    for (int i = 0; i < n; i++) {
      if (i == k || a[i][k] == 0) continue;
      Rational f = a[i][k];
      for (int j = k; j < 2 * n; j++) a[i][j] -= f * a[k][j];
    }
  }
  Matrix<Int> inv(n, std::vector<Int>(n));
  for (int i = 0; i < n; i++) {
    for (int j = 0; j < n; j++) {
      const Rational& v = a[i][n + j];
      if (denominator(v) != 1) throw Error(Errc::singular_system, "inverse is not integral");
      inv[i][j] = numerator(v);
    }
  }
  return inv;
}

/// Divides by the gcd of the entries. Zero vectors pass through.
inline void make_primitive(std::vector<Int>& v) {
  Int g(0);
  for (const Int& x : v) g = boost::multiprecision::gcd(g, x < 0 ? Int(-x) : x);
  if (g > 1)
    for (Int& x : v) x /= g;
}

}  // namespace nestcx::linalg
