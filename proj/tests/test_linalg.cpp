#include <doctest.h>

#include <cmath>
#include <random>

#include "ssfd/errors.hpp"
#include "ssfd/linalg.hpp"

using namespace ssfd;

namespace {

Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  const int r = int(rows.size());
  const int c = int(rows.begin()->size());
  Matrix m(r, c);
  int i = 0;
  for (auto& row : rows) {
    int j = 0;
    for (double v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

}  // namespace

TEST_CASE("lu_factor: identity") {
  auto f = lu_factor(Matrix::identity(3));
  for (int i = 0; i < 3; ++i) {
    CHECK(f.perm[i] == i);
    for (int j = 0; j < 3; ++j) CHECK(f.lu(i, j) == (i == j ? 1.0 : 0.0));
  }
  CHECK(f.min_pivot == 1.0);
}

TEST_CASE("lu_factor: row swap and solve") {
  auto f = lu_factor(from_rows({{0, 1}, {1, 0}}));
  CHECK(f.perm[0] == 1);
  Vector x = lu_solve(f, Vector{1.0, 2.0});
  CHECK(x[0] == doctest::Approx(2.0));
  CHECK(x[1] == doctest::Approx(1.0));
}

TEST_CASE("lu_factor: rank-1 matrix is singular") {
  CHECK_THROWS_AS(lu_factor(from_rows({{1, 2}, {2, 4}})), SingularMatrixError);
}

TEST_CASE("lu_factor rejects NaN before factorizing") {
  Matrix a = Matrix::identity(2);
  a(0, 1) = std::nan("");
  CHECK_THROWS_AS(lu_factor(a), NonFiniteValueError);
}

TEST_CASE("lu_solve examples") {
  CHECK(lu_solve(lu_factor(Matrix::identity(2)), Vector{3.0, -1.0}) == Vector{3.0, -1.0});

  Vector x = lu_solve(lu_factor(from_rows({{1, 1}, {1, 0}})), Vector{0.0, -1.0});
  CHECK(x[0] == doctest::Approx(-1.0));
  CHECK(x[1] == doctest::Approx(1.0));

  Vector y = lu_solve(lu_factor(from_rows({{2, 0}, {0, 4}})), Vector{2.0, 8.0});
  CHECK(y[0] == doctest::Approx(1.0));
  CHECK(y[1] == doctest::Approx(2.0));
}

TEST_CASE("lu_solve dimension mismatch") {
  CHECK_THROWS_AS(lu_solve(lu_factor(Matrix::identity(2)), Vector{1.0, 2.0, 3.0}), SolverError);
}

TEST_CASE("cholesky examples") {
  Matrix li = cholesky(Matrix::identity(2));
  CHECK(li(0, 0) == 1.0);
  CHECK(li(1, 1) == 1.0);

  Matrix l = cholesky(from_rows({{4, 2}, {2, 3}}));
  CHECK(l(0, 0) == doctest::Approx(2.0));
  CHECK(l(0, 1) == 0.0);
  CHECK(l(1, 0) == doctest::Approx(1.0));
  CHECK(l(1, 1) == doctest::Approx(std::sqrt(2.0)));

  // eigenvalues 3 and -1
  CHECK_THROWS_AS(cholesky(from_rows({{1, 2}, {2, 1}})), NotPositiveDefiniteError);
}

TEST_CASE("random well-conditioned solves have small residuals") {
  std::mt19937 rng(20240811);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + int(rng() % 49);
    Matrix a(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) a(i, j) = u(rng);
      a(i, i) += n;  // diagonally dominant, condition stays modest
    }
    Vector b(n);
    for (double& v : b) v = 10.0 * u(rng);
    Vector x = lu_solve(lu_factor(a), b);
    Vector r = a.matvec(x);
    for (int i = 0; i < n; ++i) r[i] -= b[i];
    CHECK(norm2(r) <= 1e-9 * (1.0 + norm2(b)));
  }
}

TEST_CASE("packed factors reproduce the permuted matrix") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + int(rng() % 20);
    Matrix a(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) a(i, j) = u(rng);
      a(i, i) += n;
    }
    auto f = lu_factor(a);
    const double scale = a.max_abs();
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        double lu_ij = 0.0;  // (L U)_ij from the packed factors
        for (int k = 0; k <= std::min(i, j); ++k)
          lu_ij += (k == i ? 1.0 : f.lu(i, k)) * f.lu(k, j);
        CHECK(std::abs(lu_ij - a(f.perm[i], j)) <= 1e-12 * scale);
      }
    }
  }
}

TEST_CASE("cholesky recovers a random lower factor") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + int(rng() % 12);
    Matrix l(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < i; ++j) l(i, j) = u(rng);
      l(i, i) = 0.5 + std::abs(u(rng));
    }
    Matrix a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int k = 0; k <= std::min(i, j); ++k) s += l(i, k) * l(j, k);
        a(i, j) = s;
      }
    Matrix back = cholesky(a);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j <= i; ++j) CHECK(back(i, j) == doctest::Approx(l(i, j)).epsilon(1e-9));
  }
}

TEST_CASE("cholesky_solve matches lu_solve on SPD systems") {
  Matrix a = from_rows({{4, 1, 0}, {1, 5, 2}, {0, 2, 6}});
  Vector b{1.0, -2.0, 3.0};
  Vector via_chol = cholesky_solve(cholesky(a), b);
  Vector via_lu = lu_solve(lu_factor(a), b);
  for (int i = 0; i < 3; ++i) CHECK(via_chol[i] == doctest::Approx(via_lu[i]).epsilon(1e-12));
}

TEST_CASE("matrix helpers") {
  Matrix a = from_rows({{1, 2}, {2, 1}});
  CHECK(a.is_symmetric());
  a(0, 1) = 2.1;
  CHECK_FALSE(a.is_symmetric());
  CHECK(a.max_abs() == doctest::Approx(2.1));
  CHECK(norm_inf(Vector{1.0, -3.0, 2.0}) == 3.0);
  CHECK(dot(Vector{1.0, 2.0}, Vector{3.0, 4.0}) == 11.0);
}
