#include <benchmark/benchmark.h>

#include <random>

#include "ssfd/linalg.hpp"
#include "ssfd/problems.hpp"
#include "ssfd/qp.hpp"
#include "ssfd/solver.hpp"

namespace {

ssfd::Matrix random_dd_matrix(int n, std::mt19937& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  ssfd::Matrix a(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a(i, j) = u(rng);
    a(i, i) += n;
  }
  return a;
}

void BM_lu_factor(benchmark::State& state) {
  const int n = int(state.range(0));
  std::mt19937 rng(42);
  ssfd::Matrix a = random_dd_matrix(n, rng);
  for (auto _ : state) {
    auto f = ssfd::lu_factor(a);
    benchmark::DoNotOptimize(f.min_pivot);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_lu_factor)->RangeMultiplier(2)->Range(16, 512)->Complexity();

void BM_lu_solve(benchmark::State& state) {
  const int n = int(state.range(0));
  std::mt19937 rng(42);
  ssfd::Matrix a = random_dd_matrix(n, rng);
  auto f = ssfd::lu_factor(a);
  ssfd::Vector b(n, 1.0);
  for (auto _ : state) {
    ssfd::Vector x = ssfd::lu_solve(f, b);
    benchmark::DoNotOptimize(x.data());
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_lu_solve)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_cholesky(benchmark::State& state) {
  const int n = int(state.range(0));
  std::mt19937 rng(7);
  ssfd::Matrix m = random_dd_matrix(n, rng);
  ssfd::Matrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k) s += m(k, i) * m(k, j);
      a(i, j) = s;
    }
  for (auto _ : state) {
    ssfd::Matrix l = ssfd::cholesky(a);
    benchmark::DoNotOptimize(l.data());
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_cholesky)->RangeMultiplier(2)->Range(16, 256)->Complexity();

void BM_qp_active_set(benchmark::State& state) {
  const int n = int(state.range(0));
  const int m = 3 * n;
  std::mt19937 rng(123);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  ssfd::Matrix b = random_dd_matrix(n, rng);
  ssfd::Matrix bspd(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) bspd(i, j) = 0.5 * (b(i, j) + b(j, i)) + (i == j ? n : 0.0);
  ssfd::Vector g0(n);
  for (double& v : g0) v = u(rng);
  std::vector<ssfd::Vector> normals(m, ssfd::Vector(n));
  ssfd::Vector offsets(m);
  for (int j = 0; j < m; ++j) {
    for (double& v : normals[j]) v = u(rng);
    offsets[j] = -0.05 - std::abs(u(rng));
  }
  ssfd::QpProblem qp{bspd, g0, normals, offsets};
  for (auto _ : state) {
    ssfd::QpSolution s = ssfd::solve_qp(qp);
    benchmark::DoNotOptimize(s.d0.data());
  }
}
BENCHMARK(BM_qp_active_set)->Arg(8)->Arg(32)->Arg(64);

void BM_solve_hs035(benchmark::State& state) {
  ssfd::BenchmarkCase c = ssfd::find_case("hs035");
  for (auto _ : state) {
    ssfd::SolveReport r = ssfd::solve(c.problem, c.initial_points[0]);
    benchmark::DoNotOptimize(r.fv);
  }
}
BENCHMARK(BM_solve_hs035);

void BM_solve_svanberg(benchmark::State& state) {
  ssfd::BenchmarkCase c = ssfd::svanberg(int(state.range(0)));
  for (auto _ : state) {
    ssfd::SolveReport r = ssfd::solve(c.problem, c.initial_points[0]);
    benchmark::DoNotOptimize(r.fv);
  }
}
BENCHMARK(BM_solve_svanberg)->Arg(10)->Arg(30)->Arg(50);

}  // namespace

BENCHMARK_MAIN();
