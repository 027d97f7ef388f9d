#include "ssfd/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>

#include "ssfd/errors.hpp"

namespace ssfd {

bool all_finite(std::span<const double> v) {
  for (double x : v)
    if (!std::isfinite(x)) return false;
  return true;
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(std::span<const double> v) { return std::sqrt(dot(v, v)); }

double norm_inf(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

void axpy(double alpha, std::span<const double> x, Vector& y) {
  for (size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

Vector scaled(double alpha, std::span<const double> x) {
  Vector r(x.begin(), x.end());
  for (double& v : r) v *= alpha;
  return r;
}

Vector add(std::span<const double> a, std::span<const double> b) {
  Vector r(a.begin(), a.end());
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

Vector sub(std::span<const double> a, std::span<const double> b) {
  Vector r(a.begin(), a.end());
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return r;
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Vector Matrix::matvec(std::span<const double> x) const {
  Vector y(rows_, 0.0);
  for (int i = 0; i < rows_; ++i) y[i] = dot(row(i), x);
  return y;
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (double v : a_) m = std::max(m, std::abs(v));
  return m;
}

bool Matrix::is_symmetric(double tol) const {
  if (!is_square()) return false;
  const double scale = 1.0 + max_abs();
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if (std::abs((*this)(i, j) - (*this)(j, i)) > tol * scale) return false;
  return true;
}

LuFactorization lu_factor(const Matrix& A) {
  if (!A.is_square()) throw SolverError("lu_factor: matrix is not square");
  if (!A.is_finite()) throw NonFiniteValueError("lu_factor: matrix has NaN/Inf entries");

  const int n = A.rows();
  LuFactorization f;
  f.lu = A;
  f.perm.resize(n);
  for (int i = 0; i < n; ++i) f.perm[i] = i;

  double max_row_sum = 0.0;
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += std::abs(A(i, j));
    max_row_sum = std::max(max_row_sum, s);
  }
  const double pivot_floor = 1e-14 * max_row_sum;
  const double a_max = A.max_abs();

  f.min_pivot = std::numeric_limits<double>::infinity();
  Matrix& lu = f.lu;
  for (int k = 0; k < n; ++k) {
    int p = k;
    for (int i = k + 1; i < n; ++i)
      if (std::abs(lu(i, k)) > std::abs(lu(p, k))) p = i;
    if (p != k) {
      for (int j = 0; j < n; ++j) std::swap(lu(k, j), lu(p, j));
      std::swap(f.perm[k], f.perm[p]);
    }
    const double piv = lu(k, k);
    f.min_pivot = std::min(f.min_pivot, std::abs(piv));
    if (std::abs(piv) <= pivot_floor)
      throw SingularMatrixError("lu_factor: pivot " + std::to_string(piv) +
                                " below threshold at column " + std::to_string(k));
    for (int i = k + 1; i < n; ++i) {
      const double m = lu(i, k) / piv;
      lu(i, k) = m;
      for (int j = k + 1; j < n; ++j) lu(i, j) -= m * lu(k, j);
    }
  }

  double u_max = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) u_max = std::max(u_max, std::abs(lu(i, j)));
  f.growth = a_max > 0.0 ? u_max / a_max : 0.0;
  return f;
}

Vector LuFactorization::solve(std::span<const double> b) const {
  const int n = order();
  Vector y(n);
  for (int i = 0; i < n; ++i) {
    double s = b[perm[i]];
    for (int j = 0; j < i; ++j) s -= lu(i, j) * y[j];
    y[i] = s;
  }
  for (int i = n - 1; i >= 0; --i) {
    double s = y[i];
    for (int j = i + 1; j < n; ++j) s -= lu(i, j) * y[j];
    y[i] = s / lu(i, i);
  }
  return y;
}

Vector lu_solve(const LuFactorization& f, std::span<const double> b) {
  if (int(b.size()) != f.order()) throw SolverError("lu_solve: dimension mismatch");
  return f.solve(b);
}

Matrix cholesky(const Matrix& A) {
  if (!A.is_square()) throw SolverError("cholesky: matrix is not square");
  const int n = A.rows();
  Matrix L(n, n);
  for (int j = 0; j < n; ++j) {
    double d = A(j, j);
    for (int k = 0; k < j; ++k) d -= L(j, k) * L(j, k);
    if (d <= 0.0 || !std::isfinite(d))
      throw NotPositiveDefiniteError("cholesky: nonpositive pivot at column " + std::to_string(j));
    L(j, j) = std::sqrt(d);
    for (int i = j + 1; i < n; ++i) {
      double s = A(i, j);
      for (int k = 0; k < j; ++k) s -= L(i, k) * L(j, k);
      L(i, j) = s / L(j, j);
    }
  }
  return L;
}

Vector forward_subst(const Matrix& L, std::span<const double> b) {
  const int n = L.rows();
  Vector y(n);
  for (int i = 0; i < n; ++i) {
    double s = b[i];
    for (int j = 0; j < i; ++j) s -= L(i, j) * y[j];
    y[i] = s / L(i, i);
  }
  return y;
}

Vector cholesky_solve(const Matrix& L, std::span<const double> b) {
  const int n = L.rows();
  Vector y = forward_subst(L, b);
  for (int i = n - 1; i >= 0; --i) {
    double s = y[i];
    for (int j = i + 1; j < n; ++j) s -= L(j, i) * y[j];
    y[i] = s / L(i, i);
  }
  return y;
}

}  // namespace ssfd
