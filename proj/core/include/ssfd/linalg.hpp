#ifndef SSFD_LINALG_HPP
#define SSFD_LINALG_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace ssfd {

using Vector = std::vector<double>;

bool all_finite(std::span<const double> v);

double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> v);
double norm_inf(std::span<const double> v);

/// y += alpha * x
void axpy(double alpha, std::span<const double> x, Vector& y);

Vector scaled(double alpha, std::span<const double> x);
Vector add(std::span<const double> a, std::span<const double> b);
Vector sub(std::span<const double> a, std::span<const double> b);

/// Dense row-major real matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, 0.0) {}

  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  double& operator()(int r, int c) { return a_[size_t(r) * cols_ + c]; }
  double operator()(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

  std::span<const double> row(int r) const { return {a_.data() + size_t(r) * cols_, size_t(cols_)}; }

  const std::vector<double>& data() const { return a_; }

  Vector matvec(std::span<const double> x) const;

  bool is_square() const { return rows_ == cols_; }
  bool is_finite() const { return all_finite(a_); }
  double max_abs() const;

  /// max_ij |A_ij - A_ji| <= tol * (1 + max_abs)
  bool is_symmetric(double tol = 1e-12) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> a_;
};

/// PA = LU with partial pivoting, packed in a single matrix.
///
/// min_pivot is the smallest pivot magnitude met during elimination and
/// growth the classic ratio max|U| / max|A|; both are kept for diagnostics
/// on the saddle systems this kernel exists to solve.
struct LuFactorization {
  Matrix lu;
  std::vector<int> perm;
  double min_pivot = 0.0;
  double growth = 0.0;

  int order() const { return lu.rows(); }
  Vector solve(std::span<const double> b) const;
};

/// Factor a square matrix; throws SingularMatrixError when a pivot magnitude
/// drops below 1e-14 times the max row sum of |A|, NonFiniteValueError when
/// A contains NaN/Inf.
LuFactorization lu_factor(const Matrix& A);

Vector lu_solve(const LuFactorization& f, std::span<const double> b);

/// Lower Cholesky factor of a symmetric positive definite matrix; throws
/// NotPositiveDefiniteError when a diagonal pivot is nonpositive.
Matrix cholesky(const Matrix& A);

/// Solve A x = b given L from cholesky(A) (two triangular sweeps).
Vector cholesky_solve(const Matrix& L, std::span<const double> b);

/// Forward substitution L y = b for lower-triangular L.
Vector forward_subst(const Matrix& L, std::span<const double> b);

}  // namespace ssfd

#endif  // SSFD_LINALG_HPP
