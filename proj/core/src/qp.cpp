#include "ssfd/qp.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "ssfd/errors.hpp"

namespace ssfd {

namespace {

// Reduced (range-space) equality solve for the working set W:
//   u = -B^{-1}(g0 + A_W' mu),  S mu = -(b_W + A_W B^{-1} g0),
// with S = A_W B^{-1} A_W' and b_j = -offsets[j].
struct ReducedSolver {
  const QpProblem& p;
  Matrix L;               // chol(B), fixed for the whole solve
  Vector z0;              // B^{-1} g0
  std::vector<std::optional<Vector>> y;  // cached B^{-1} a_j per constraint

  explicit ReducedSolver(const QpProblem& prob) : p(prob), y(prob.num_constraints()) {
    L = cholesky(p.B);
    z0 = cholesky_solve(L, p.g0);
  }

  const Vector& binv_normal(int j) {
    if (!y[j]) y[j] = cholesky_solve(L, p.normals[j]);
    return *y[j];
  }

  // Returns (u, mu) for the working set; throws NotPositiveDefiniteError
  // when the normals in W are (numerically) dependent. A few rounds of
  // iterative refinement on the KKT system keep the stationarity residual
  // near machine precision even when B is badly conditioned (BFGS matrices
  // routinely reach condition 1e10 on these problems).
  std::pair<Vector, Vector> solve(const std::vector<int>& W) {
    const int nw = int(W.size());
    const int n = p.dim();
    Matrix Ls;
    if (nw > 0) {
      Matrix S(nw, nw);
      for (int i = 0; i < nw; ++i) {
        const Vector& yi = binv_normal(W[i]);
        for (int j = 0; j <= i; ++j) S(i, j) = S(j, i) = dot(p.normals[W[j]], yi);
      }
      Ls = cholesky(S);
    }

    Vector u(n, 0.0), mu(nw, 0.0);
    const double scale = 1.0 + norm_inf(p.g0);
    for (int round = 0; round < 4; ++round) {
      // KKT residual at (u, mu): r1 = -(g0 + Bu + A'mu), r2 = b_W - A u.
      Vector r1 = p.B.matvec(u);
      axpy(1.0, p.g0, r1);
      for (int i = 0; i < nw; ++i) axpy(mu[i], p.normals[W[i]], r1);
      for (double& v : r1) v = -v;
      Vector r2(nw);
      for (int i = 0; i < nw; ++i) r2[i] = -p.offsets[W[i]] - dot(p.normals[W[i]], u);
      if (round > 0 && norm_inf(r1) <= 1e-12 * scale && norm_inf(r2) <= 1e-12 * scale) break;

      // Correction: B du + A' dmu = r1, A du = r2 via the Schur complement.
      Vector w = cholesky_solve(L, r1);
      Vector dmu(nw);
      if (nw > 0) {
        Vector srhs(nw);
        for (int i = 0; i < nw; ++i) srhs[i] = dot(p.normals[W[i]], w) - r2[i];
        dmu = cholesky_solve(Ls, srhs);
        for (int i = 0; i < nw; ++i) axpy(-dmu[i], binv_normal(W[i]), w);
      }
      axpy(1.0, w, u);
      axpy(1.0, dmu, mu);
    }
    return {u, mu};
  }
};

}  // namespace

QpSolution solve_qp(const QpProblem& p, std::span<const int> warm) {
  const int n = p.dim();
  const int m = p.num_constraints();
  const int max_iters = 50 * (n + m);
  const double g_scale = 1.0 + norm_inf(p.g0);

  ReducedSolver red(p);

  // Start at d = 0 (feasible by construction). Seed the working set from the
  // warm hint, keeping only constraints active at the origin; fall back to a
  // cold start if the seeded reduced system is degenerate.
  Vector d(n, 0.0);
  std::vector<int> W;
  for (int j : warm)
    if (j >= 0 && j < m && std::abs(p.offsets[j]) <= 1e-12) W.push_back(j);
  std::sort(W.begin(), W.end());
  if (!W.empty()) {
    try {
      red.solve(W);
    } catch (const NotPositiveDefiniteError&) {
      W.clear();
    }
  }

  QpSolution sol;
  for (int iter = 0;; ++iter) {
    if (iter >= max_iters)
      throw QpError("solve_qp: active-set iteration cap reached (cycling guard)");
    sol.iterations = iter + 1;

    Vector u, mu;
    try {
      std::tie(u, mu) = red.solve(W);
    } catch (const NotPositiveDefiniteError& e) {
      throw QpError(std::string("solve_qp: reduced system breakdown: ") + e.what());
    }

    Vector step = sub(u, d);
    const double step_norm = norm_inf(step);

    if (step_norm <= 1e-12 * (1.0 + norm_inf(u))) {
      // At the minimizer over the current working set: check multipliers.
      int drop = -1;
      double most_negative = -1e-11 * g_scale;
      for (int i = 0; i < int(W.size()); ++i) {
        if (mu[i] < most_negative) {
          most_negative = mu[i];
          drop = i;
        }
      }
      if (drop >= 0) {
        W.erase(W.begin() + drop);
        continue;
      }
      // Return the refined equality-constrained point: it pairs with mu to
      // machine precision and sits within the step tolerance of d.
      d = std::move(u);
      sol.d0 = d;
      sol.lambda.assign(m, 0.0);
      for (int i = 0; i < int(W.size()); ++i)
        sol.lambda[W[i]] = mu[i] < 1e-12 ? 0.0 : mu[i];
      for (int j = 0; j < m; ++j)
        if (p.offsets[j] + dot(p.normals[j], d) >= -1e-10) sol.active.push_back(j);
      sol.kkt_residual = verify_kkt(p, sol);
      return sol;
    }

    // Ratio test toward u; ties on the blocking step pick the lowest index.
    double alpha = 1.0;
    int blocking = -1;
    for (int j = 0; j < m; ++j) {
      if (std::find(W.begin(), W.end(), j) != W.end()) continue;
      const double ap = dot(p.normals[j], step);
      if (ap <= 1e-13 * (1.0 + norm2(p.normals[j]) * step_norm)) continue;
      const double slack = -p.offsets[j] - dot(p.normals[j], d);
      const double aj = std::max(slack, 0.0) / ap;
      if (aj < alpha - 1e-14) {
        alpha = aj;
        blocking = j;
      }
    }
    axpy(alpha, step, d);
    if (blocking >= 0) {
      W.insert(std::upper_bound(W.begin(), W.end(), blocking), blocking);
      if (int(W.size()) > n)
        throw QpError("solve_qp: working set exceeded dimension");
    }
  }
}

double verify_kkt(const QpProblem& p, const QpSolution& s) {
  const int m = p.num_constraints();
  Vector stat = p.B.matvec(s.d0);
  axpy(1.0, p.g0, stat);
  for (int j = 0; j < m; ++j) axpy(s.lambda[j], p.normals[j], stat);
  double v = norm2(stat);
  for (int j = 0; j < m; ++j) {
    const double resid = p.offsets[j] + dot(p.normals[j], s.d0);
    v = std::max(v, resid);                           // primal feasibility
    v = std::max(v, -s.lambda[j]);                    // multiplier sign
    v = std::max(v, std::abs(s.lambda[j] * resid));   // complementarity
  }
  return v;
}

}  // namespace ssfd
