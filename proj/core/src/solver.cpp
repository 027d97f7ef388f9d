#include "ssfd/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "ssfd/errors.hpp"

namespace ssfd {

namespace {

// phi^e with the exact-zero convention: 0^e = 0 for the positive exponents
// used here.
double pow0(double phi, double e) { return phi > 0.0 ? std::pow(phi, e) : 0.0; }

Vector join(int n, int m, double head, std::span<const double> tail_extra, double tail_fill) {
  Vector rhs(size_t(n) + m, head);
  for (int j = 0; j < m; ++j)
    rhs[size_t(n) + j] = tail_fill + (tail_extra.empty() ? 0.0 : tail_extra[j]);
  return rhs;
}

double rel_residual(const Matrix& V, std::span<const double> z, std::span<const double> rhs) {
  Vector r = V.matvec(z);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= rhs[i];
  return norm2(r) / (1.0 + norm2(rhs));
}

}  // namespace

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::KktPoint: return "KktPoint";
    case SolveStatus::MaxIterations: return "MaxIterations";
    case SolveStatus::LineSearchFailure: return "LineSearchFailure";
    case SolveStatus::DegenerateSystem: return "DegenerateSystem";
    case SolveStatus::QpFailure: return "QpFailure";
  }
  return "?";
}

Classification classify(const Vector& fvals) {
  if (!all_finite(fvals)) throw NonFiniteValueError("classify: constraint values not finite");
  const int m = int(fvals.size());
  Classification c;
  c.fbar.resize(m);
  for (double v : fvals) c.phi = std::max(c.phi, v);
  for (int j = 0; j < m; ++j) {
    if (fvals[j] <= 0.0) {
      c.i_minus.push_back(j);
      c.fbar[j] = fvals[j];
    } else {
      c.i_plus.push_back(j);
      c.fbar[j] = fvals[j] - c.phi;
    }
    if (c.fbar[j] == 0.0) c.i_active.push_back(j);
  }
  return c;
}

QpProblem build_qp(const IterateState& s) {
  return QpProblem{s.B, s.g0, s.grads, s.cls.fbar};
}

bool kkt_stop_test(double norm_d0, double phi, double tol_d0) {
  return norm_d0 < tol_d0 && phi == 0.0;
}

Matrix assemble_V(const Matrix& B, const std::vector<Vector>& grads, const Vector& fbar,
                  const Vector& d0) {
  const int n = B.rows();
  const int m = int(grads.size());
  const double nd0 = norm2(d0);
  Matrix V(n + m, n + m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) V(i, j) = B(i, j);
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < n; ++i) {
      V(i, n + j) = grads[j][i];
      V(n + j, i) = grads[j][i];
    }
    const double dj = std::abs(fbar[j]) * (std::abs(fbar[j] + dot(grads[j], d0)) + nd0);
    V(n + j, n + j) = -dj;
  }
  return V;
}

std::pair<Vector, Vector> solve_sle_feasible(const LuFactorization& V_fact, int n, int m,
                                             double norm_d0, double phi, double sigma) {
  Vector rhs = join(n, m, 0.0, {}, -(norm_d0 + pow0(phi, sigma)));
  Vector z = lu_solve(V_fact, rhs);
  return {Vector(z.begin(), z.begin() + n), Vector(z.begin() + n, z.end())};
}

Vector compute_Ftilde(const Problem& p, const Vector& x, const Vector& d0, const Vector& fvals,
                      const std::vector<Vector>& grads, EvalCounters& c) {
  const int m = p.num_constraints();
  Vector y = add(x, d0);
  Vector ft(m);
  for (int j = 0; j < m; ++j) ft[j] = p.constraint(j, y, c) - fvals[j] - dot(grads[j], d0);
  return ft;
}

std::pair<Vector, Vector> solve_sle_correction(const LuFactorization& V_fact, int n, int m,
                                               double norm_d0, double phi, const Vector& Ftilde,
                                               const SolverParams& prm) {
  const double shift = -(std::pow(norm_d0, prm.tau) + pow0(phi, prm.sigma));
  Vector rhs = join(n, m, 0.0, scaled(-1.0, Ftilde), shift);
  Vector z = lu_solve(V_fact, rhs);
  return {Vector(z.begin(), z.begin() + n), Vector(z.begin() + n, z.end())};
}

bool check_condition_13(double g0d0, double norm_d0, double norm_d, double phi,
                        const SolverParams& prm) {
  const double rhs = prm.zeta * std::min(-std::pow(norm_d0, prm.delta), -std::pow(norm_d, prm.delta)) +
                     prm.xi * pow0(phi, prm.varrho);
  return g0d0 <= rhs;
}

double compute_beta(double g0d0, double g0dtilde, double phi, double theta) {
  if (g0dtilde <= g0d0) return 1.0;
  const double denom = g0dtilde - g0d0;
  if (denom < 1e-14 * (1.0 + std::abs(g0d0))) return 1.0;
  const double num = (theta - 1.0) * g0d0 + pow0(phi, theta);
  return std::clamp(num / denom, 0.0, 1.0);
}

Vector combine_q(const Vector& d0, const Vector& dtilde, double beta) {
  Vector q(d0.size());
  for (size_t i = 0; i < q.size(); ++i) q[i] = (1.0 - beta) * d0[i] + beta * dtilde[i];
  return q;
}

namespace {

struct Probe {
  double f0;
  Vector fvals;
};

// Evaluate the trial point x + t dir, checking the constraint groups one
// scalar at a time and the objective last, so counters see only what was
// actually computed.
std::optional<Probe> probe_trial(const Problem& p, const IterateState& s, const Vector& dir,
                                 double t, double plus_bound, double f0_bound, EvalCounters& c) {
  Vector y = s.x;
  axpy(t, dir, y);
  const int m = p.num_constraints();
  Vector f(m);
  for (int j = 0; j < m; ++j) {
    f[j] = p.constraint(j, y, c);
    const double bound = s.fvals[j] > 0.0 ? plus_bound : 0.0;
    if (f[j] > bound) return std::nullopt;
  }
  const double f0 = p.objective(y, c);
  if (f0 > f0_bound) return std::nullopt;
  return Probe{f0, std::move(f)};
}

}  // namespace

std::optional<LineSearchResult> line_search_step3(const Problem& p, const IterateState& s,
                                                  const Vector& d, double g0d0, double norm_d0,
                                                  const SolverParams& prm, EvalCounters& c) {
  const double phi = s.cls.phi;
  const double drop = std::pow(norm_d0, prm.tau) + pow0(phi, prm.sigma);
  const double relax = prm.rho * (1.0 - prm.alpha) * pow0(phi, prm.theta);
  for (double t = 1.0;; t *= 0.5) {
    auto r = probe_trial(p, s, d, t, phi - prm.alpha * t * drop,
                         s.f0 + prm.alpha * t * g0d0 + relax * t, c);
    if (r) return LineSearchResult{t, r->f0, std::move(r->fvals)};
    if (0.5 * t < prm.ls_epsilon) return std::nullopt;
  }
}

LineSearchResult line_search_step5(const Problem& p, const IterateState& s, const Vector& q,
                                   double g0q, double beta, double norm_d0,
                                   const SolverParams& prm, EvalCounters& c) {
  const double phi = s.cls.phi;
  const double drop = beta * (norm_d0 + pow0(phi, prm.sigma));
  const double relax = prm.rho * (1.0 - prm.gamma) * pow0(phi, prm.theta);
  double t = 1.0;
  for (int trial = 0; trial < prm.max_step5_backtracks; ++trial, t *= prm.eta) {
    auto r = probe_trial(p, s, q, t, phi - prm.gamma * t * drop,
                         s.f0 + prm.gamma * t * g0q + relax * t, c);
    if (r) return LineSearchResult{t, r->f0, std::move(r->fvals)};
  }
  throw LineSearchError("step-5 line search exhausted " +
                        std::to_string(prm.max_step5_backtracks) + " trials");
}

BfgsResult bfgs_update(const Matrix& B, const Vector& s, const Vector& y) {
  BfgsResult out{B};
  if (norm2(s) < 1e-14) return out;
  Vector Bs = B.matvec(s);
  const double sBs = dot(s, Bs);
  const double ys = dot(y, s);
  if (!(sBs > 0.0) || !std::isfinite(ys)) {
    out.fallback = true;
    return out;
  }
  Vector ybar = y;
  double ybar_s = ys;
  if (ys < 0.2 * sBs) {
    const double psi = 0.8 * sBs / (sBs - ys);
    for (size_t i = 0; i < ybar.size(); ++i) ybar[i] = psi * y[i] + (1.0 - psi) * Bs[i];
    ybar_s = psi * ys + (1.0 - psi) * sBs;
    out.damped = true;
  }
  const int n = B.rows();
  Matrix Bp = B;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      const double v = B(i, j) - Bs[i] * Bs[j] / sBs + ybar[i] * ybar[j] / ybar_s;
      Bp(i, j) = Bp(j, i) = v;
    }
  }
  try {
    Matrix Lp = cholesky(Bp);
    // Reject updates that would leave the matrix numerically unusable: the
    // QP and saddle solves lose the 1e-8 residual contract beyond condition
    // ~1e12 (diagonal ratio is a cheap underestimate of the condition
    // number).
    double dmin = Lp(0, 0), dmax = Lp(0, 0);
    for (int i = 1; i < n; ++i) {
      dmin = std::min(dmin, Lp(i, i));
      dmax = std::max(dmax, Lp(i, i));
    }
    if (dmax > 1e6 * dmin)
      out.fallback = true;
    else
      out.B = std::move(Bp);
  } catch (const NotPositiveDefiniteError&) {
    out.fallback = true;
  }
  return out;
}

StepResult step(const Problem& p, const IterateState& s, const SolverParams& prm,
                EvalCounters& c) {
  const int n = p.dim();
  const int m = p.num_constraints();
  StepResult out;
  DirectionBundle& b = out.bundle;
  IterationRecord& rec = out.record;
  rec.k = s.k;
  rec.phi = s.cls.phi;
  rec.f0 = s.f0;

  // Step 1: master direction.
  QpProblem qp = build_qp(s);
  QpSolution qs =
      solve_qp(qp, prm.warm_start_qp ? std::span<const int>(s.last_active) : std::span<const int>{});
  b.d0 = qs.d0;
  b.lambda = qs.lambda;
  b.J = qs.active;
  b.qp_kkt_residual = qs.kkt_residual;
  b.norm_d0 = norm2(b.d0);
  b.g0d0 = dot(s.g0, b.d0);
  rec.norm_d0 = b.norm_d0;
  out.inv.qp_kkt_rel = qs.kkt_residual / (1.0 + norm2(s.g0));

  if (kkt_stop_test(b.norm_d0, s.cls.phi, prm.tol_d0)) {
    rec.step_source = "stop";
    return out;
  }

  // Step 2: correction direction; the saddle matrix is factorized once and
  // shared with the step-4 solve.
  b.Ftilde = compute_Ftilde(p, s.x, b.d0, s.fvals, s.grads, c);
  Matrix V = assemble_V(s.B, s.grads, s.cls.fbar, b.d0);
  b.V_fact = lu_factor(V);
  std::tie(b.d1, b.h1) = solve_sle_correction(b.V_fact, n, m, b.norm_d0, s.cls.phi, b.Ftilde, prm);
  b.d = add(b.d0, b.d1);

  const double phi_sig = pow0(s.cls.phi, prm.sigma);
  if (prm.check_invariants) {
    Vector z(b.d1);
    z.insert(z.end(), b.h1.begin(), b.h1.end());
    Vector rhs = join(n, m, 0.0, scaled(-1.0, b.Ftilde), -(std::pow(b.norm_d0, prm.tau) + phi_sig));
    out.inv.sle_resid_rel = rel_residual(V, z, rhs);
  }

  std::optional<LineSearchResult> ls;
  if (check_condition_13(b.g0d0, b.norm_d0, norm2(b.d), s.cls.phi, prm))
    ls = line_search_step3(p, s, b.d, b.g0d0, b.norm_d0, prm, c);

  if (ls) {
    b.cycle = 1;
    rec.step_source = "step3";
  } else {
    // Step 4: tilt direction from the second solve with the same matrix.
    auto [dt, ht] = solve_sle_feasible(b.V_fact, n, m, b.norm_d0, s.cls.phi, prm.sigma);
    b.g0dtilde = dot(s.g0, dt);
    b.beta = compute_beta(b.g0d0, b.g0dtilde, s.cls.phi, prm.theta);
    b.q = combine_q(b.d0, dt, b.beta);
    b.g0q = dot(s.g0, b.q);

    if (prm.check_invariants) {
      Vector z(dt);
      z.insert(z.end(), ht.begin(), ht.end());
      Vector rhs = join(n, m, 0.0, {}, -(b.norm_d0 + phi_sig));
      out.inv.sle_resid_rel = std::max(out.inv.sle_resid_rel, rel_residual(V, z, rhs));
      for (int j : s.cls.i_active) {
        out.inv.dtilde_active_err =
            std::max(out.inv.dtilde_active_err, std::abs(dot(s.grads[j], dt) + b.norm_d0 + phi_sig));
        out.inv.lemma3ii =
            std::max(out.inv.lemma3ii, dot(s.grads[j], b.q) + b.beta * (b.norm_d0 + phi_sig));
      }
      const double phi_th = pow0(s.cls.phi, prm.theta);
      out.inv.lemma3i = b.g0q + 0.5 * prm.theta * dot(b.d0, s.B.matvec(b.d0)) - phi_th;
      out.inv.eq9 = b.g0q - prm.theta * b.g0d0 - phi_th;
      out.inv.cycle2 = true;
    }
    b.dtilde = std::move(dt);
    b.htilde = std::move(ht);

    // Step 5.
    ls = line_search_step5(p, s, b.q, b.g0q, b.beta, b.norm_d0, prm, c);
    b.cycle = 2;
    rec.step_source = "step5";
    b.d = b.q;
  }
  rec.cycle = b.cycle;
  rec.t = ls->t;
  rec.beta = b.beta;

  // Step 6: quasi-Newton update with the Lagrangian-gradient difference at
  // the current multipliers, then advance.
  Vector step_vec = scaled(ls->t, b.d);
  Vector x_new = add(s.x, step_vec);
  Vector g0_new = p.objective_gradient(x_new, c);
  std::vector<Vector> grads_new = eval_constraint_gradients(p, x_new, c);
  Vector grad_L_old = s.g0;
  Vector grad_L_new = g0_new;
  for (int j = 0; j < m; ++j) {
    if (b.lambda[j] == 0.0) continue;
    axpy(b.lambda[j], s.grads[j], grad_L_old);
    axpy(b.lambda[j], grads_new[j], grad_L_new);
  }
  BfgsResult up = bfgs_update(s.B, step_vec, sub(grad_L_new, grad_L_old));
  out.bfgs_damped = up.damped;
  out.bfgs_fallback = up.fallback;

  IterateState nx;
  nx.k = s.k + 1;
  nx.x = std::move(x_new);
  nx.B = std::move(up.B);
  nx.fvals = std::move(ls->fvals_new);
  nx.f0 = ls->f0_new;
  nx.cls = classify(nx.fvals);
  nx.g0 = std::move(g0_new);
  nx.grads = std::move(grads_new);
  nx.last_active = std::move(qs.active);
  out.next = std::move(nx);
  return out;
}

IterateState make_initial_state(const Problem& p, const Vector& x0, EvalCounters& c) {
  if (int(x0.size()) != p.dim())
    throw ConfigError(p.name() + ": x0 has dimension " + std::to_string(x0.size()) +
                      ", expected " + std::to_string(p.dim()));
  if (!all_finite(x0)) throw NonFiniteValueError(p.name() + ": x0 is not finite");
  IterateState s;
  s.x = x0;
  s.B = Matrix::identity(p.dim());
  s.f0 = p.objective(x0, c);
  s.fvals = eval_constraints(p, x0, c);
  s.cls = classify(s.fvals);
  s.g0 = p.objective_gradient(x0, c);
  s.grads = eval_constraint_gradients(p, x0, c);
  return s;
}

SolveReport solve(const Problem& p, const Vector& x0, const SolverParams& prm) {
  prm.validate();
  SolveReport rep;
  EvalCounters c;
  const auto t_start = std::chrono::steady_clock::now();
  std::optional<IterateState> cur;
  try {
    cur = make_initial_state(p, x0, c);
    while (true) {
      if (cur->k >= prm.max_iter) {
        rep.status = SolveStatus::MaxIterations;
        rep.message = "iteration cap reached";
        break;
      }
      StepResult sr = step(p, *cur, prm, c);

      auto& inv = rep.invariants;
      inv.max_qp_kkt_rel = std::max(inv.max_qp_kkt_rel, sr.inv.qp_kkt_rel);
      inv.max_sle_resid_rel = std::max(inv.max_sle_resid_rel, sr.inv.sle_resid_rel);
      inv.max_dtilde_active_err = std::max(inv.max_dtilde_active_err, sr.inv.dtilde_active_err);
      if (sr.inv.cycle2) {
        inv.max_lemma3i = std::max(inv.max_lemma3i, sr.inv.lemma3i);
        inv.max_lemma3ii = std::max(inv.max_lemma3ii, sr.inv.lemma3ii);
        inv.max_eq9 = std::max(inv.max_eq9, sr.inv.eq9);
        if (sr.bundle.beta < 0.0 || sr.bundle.beta > 1.0) inv.beta_in_range = false;
      }
      if (sr.bfgs_fallback) ++inv.bfgs_fallbacks;

      if (!sr.next) {
        rep.trace.push_back(sr.record);
        rep.status = SolveStatus::KktPoint;
        break;
      }
      rep.trace.push_back(sr.record);
      if (cur->cls.phi > 0.0)
        ++rep.nio;
      else
        ++rep.nii;
      if (sr.record.cycle == 1)
        ++rep.n_cycle1;
      else
        ++rep.n_cycle2;

      const IterateState& nx = *sr.next;
      if (!std::includes(nx.cls.i_minus.begin(), nx.cls.i_minus.end(), cur->cls.i_minus.begin(),
                         cur->cls.i_minus.end()))
        ++inv.iminus_shrank;
      if (cur->cls.phi > 0.0 && nx.cls.phi > 0.0 && nx.cls.phi >= cur->cls.phi)
        ++inv.phi_nonmonotone;
      if (cur->cls.phi == 0.0 && nx.cls.phi > 0.0) ++inv.phi_nonmonotone;
      if (cur->cls.phi == 0.0 && nx.f0 > cur->f0) ++inv.f0_increased_feasible;
      cur = std::move(*sr.next);
    }
  } catch (const SingularMatrixError& e) {
    rep.status = SolveStatus::DegenerateSystem;
    rep.message = e.what();
  } catch (const NotPositiveDefiniteError& e) {
    rep.status = SolveStatus::DegenerateSystem;
    rep.message = e.what();
  } catch (const NonFiniteValueError& e) {
    rep.status = SolveStatus::DegenerateSystem;
    rep.message = e.what();
  } catch (const QpError& e) {
    rep.status = SolveStatus::QpFailure;
    rep.message = e.what();
  } catch (const LineSearchError& e) {
    rep.status = SolveStatus::LineSearchFailure;
    rep.message = e.what();
  }
  rep.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
  if (cur) {
    rep.x_final = cur->x;
    rep.fv = cur->f0;
  }
  rep.ni = rep.nio + rep.nii;
  rep.nf0 = c.nf0;
  rep.nf = c.nf;
  rep.counters = c;
  return rep;
}

}  // namespace ssfd
