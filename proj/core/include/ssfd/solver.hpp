#ifndef SSFD_SOLVER_HPP
#define SSFD_SOLVER_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ssfd/linalg.hpp"
#include "ssfd/params.hpp"
#include "ssfd/problem.hpp"
#include "ssfd/qp.hpp"

namespace ssfd {

/// Index-set split of the constraint values at a point:
/// i_minus = {j : f_j <= 0}, i_plus = {j : f_j > 0},
/// phi = max(0, f_j), fbar_j = f_j on i_minus and f_j - phi on i_plus,
/// i_active = {j : fbar_j = 0} (exact zero; fbar <= 0 by construction).
struct Classification {
  std::vector<int> i_minus;
  std::vector<int> i_plus;
  std::vector<int> i_active;
  double phi = 0.0;
  Vector fbar;
};

Classification classify(const Vector& fvals);

/// Everything the solver knows at iterate k. Gradients and the previous QP
/// active set are caches so that one gradient sweep per accepted point
/// suffices.
struct IterateState {
  int k = 0;
  Vector x;
  Matrix B;                    // symmetric positive definite
  Vector fvals;                // m constraint values at x
  double f0 = 0.0;             // objective value at x
  Classification cls;
  Vector g0;                   // objective gradient at x
  std::vector<Vector> grads;   // constraint gradients at x
  std::vector<int> last_active;  // QP active set from the previous iteration
};

/// Directions computed for one iteration, together with the shared saddle
/// factorization.
struct DirectionBundle {
  Vector d0;
  Vector lambda;
  std::vector<int> J;
  double qp_kkt_residual = 0.0;
  LuFactorization V_fact;
  Vector Ftilde;
  Vector d1, h1;
  std::optional<Vector> dtilde, htilde;  // present only on cycle II
  double beta = 0.0;
  Vector q;   // present only on cycle II
  Vector d;   // accepted search direction: d0 + d1 on cycle I, q on cycle II
  double g0d0 = 0.0, g0dtilde = 0.0, g0q = 0.0;
  double norm_d0 = 0.0;
  int cycle = 0;  // 1 or 2 once the direction is final
};

struct IterationRecord {
  int k = 0;
  double phi = 0.0;
  double f0 = 0.0;
  double norm_d0 = 0.0;
  double t = 0.0;
  int cycle = 0;                  // 1 or 2; 0 for the terminal pass
  std::string step_source;        // "step3", "step5" or "stop"
  double beta = 0.0;              // meaningful on cycle II only
};

/// Per-run maxima of the runtime invariant residuals, recorded when
/// SolverParams::check_invariants is on.
struct InvariantStats {
  double max_qp_kkt_rel = 0.0;        // KKT residual / (1 + ||g0||)
  double max_sle_resid_rel = 0.0;     // ||V z - rhs|| / (1 + ||rhs||), both solves
  double max_dtilde_active_err = 0.0; // |g_j'dtilde + ||d0|| + phi^sigma| on i_active
  double max_lemma3i = 0.0;           // g0'q + theta/2 d0'Bd0 - phi^theta
  double max_lemma3ii = 0.0;          // g_j'q + beta(||d0|| + phi^sigma) on i_active
  double max_eq9 = 0.0;               // g0'q - theta g0'd0 - phi^theta
  bool beta_in_range = true;
  bool all_B_spd = true;
  int bfgs_fallbacks = 0;             // updates rejected by the SPD post-check
  int iminus_shrank = 0;              // accepted steps where I- lost an index
  int phi_nonmonotone = 0;            // infeasible steps where phi failed to drop
  int f0_increased_feasible = 0;      // feasible steps where f0 went up
};

enum class SolveStatus { KktPoint, MaxIterations, LineSearchFailure, DegenerateSystem, QpFailure };

const char* to_string(SolveStatus s);

struct SolveReport {
  SolveStatus status = SolveStatus::MaxIterations;
  std::string message;
  Vector x_final;
  double fv = 0.0;
  int ni = 0;   // = nio + nii
  int nio = 0;  // iterations started with phi > 0
  int nii = 0;  // iterations started with phi = 0
  long nf0 = 0;
  long nf = 0;
  int n_cycle1 = 0;
  int n_cycle2 = 0;
  double wall_time_seconds = 0.0;
  std::vector<IterationRecord> trace;
  InvariantStats invariants;
  EvalCounters counters;
};

// --- single-iteration building blocks ---------------------------------

QpProblem build_qp(const IterateState& s);

/// True iff ||d0|| < tol_d0 and phi == 0 (exact zero).
bool kkt_stop_test(double norm_d0, double phi, double tol_d0);

/// V = [[B, N], [N', -D]] with D_j = |fbar_j| (|fbar_j + g_j'd0| + ||d0||).
Matrix assemble_V(const Matrix& B, const std::vector<Vector>& grads, const Vector& fbar,
                  const Vector& d0);

/// Solve V (d;h) = (0; -(||d0|| + phi^sigma) ones) for the tilt direction.
std::pair<Vector, Vector> solve_sle_feasible(const LuFactorization& V_fact, int n, int m,
                                             double norm_d0, double phi, double sigma);

/// Ftilde_j = f_j(x + d0) - f_j(x) - g_j(x)'d0; one constraint sweep at x+d0.
Vector compute_Ftilde(const Problem& p, const Vector& x, const Vector& d0, const Vector& fvals,
                      const std::vector<Vector>& grads, EvalCounters& c);

/// Solve V (d;h) = (0; -(||d0||^tau + phi^sigma) ones - Ftilde).
std::pair<Vector, Vector> solve_sle_correction(const LuFactorization& V_fact, int n, int m,
                                               double norm_d0, double phi, const Vector& Ftilde,
                                               const SolverParams& prm);

/// g0'd0 <= zeta min{-||d0||^delta, -||d||^delta} + xi phi^varrho
bool check_condition_13(double g0d0, double norm_d0, double norm_d, double phi,
                        const SolverParams& prm);

/// Largest beta in [0,1] with g0'q <= theta g0'd0 + phi^theta.
double compute_beta(double g0d0, double g0dtilde, double phi, double theta);

Vector combine_q(const Vector& d0, const Vector& dtilde, double beta);

struct LineSearchResult {
  double t = 0.0;
  double f0_new = 0.0;
  Vector fvals_new;
};

/// Halving search over {1, 1/2, 1/4, ...} down to ls_epsilon; absent when
/// every trial fails. Constraints are probed one scalar at a time and the
/// objective only once they all pass, so the counters reflect exactly what
/// was evaluated.
std::optional<LineSearchResult> line_search_step3(const Problem& p, const IterateState& s,
                                                  const Vector& d, double g0d0, double norm_d0,
                                                  const SolverParams& prm, EvalCounters& c);

/// Search over {1, eta, eta^2, ...}; throws LineSearchError after
/// max_step5_backtracks trials.
LineSearchResult line_search_step5(const Problem& p, const IterateState& s, const Vector& q,
                                   double g0q, double beta, double norm_d0,
                                   const SolverParams& prm, EvalCounters& c);

struct BfgsResult {
  Matrix B;
  bool damped = false;    // Powell damping engaged
  bool fallback = false;  // SPD post-check failed, previous B kept
};

/// Powell-damped BFGS update with threshold 0.2; skips when ||s|| < 1e-14
/// and falls back to the previous matrix when the updated one fails a
/// Cholesky check.
BfgsResult bfgs_update(const Matrix& B, const Vector& s, const Vector& y);

/// Invariant residuals sampled on one iteration. Violation-style quantities
/// are "value minus bound": negative means satisfied with margin.
struct InvariantSample {
  double qp_kkt_rel = 0.0;
  double sle_resid_rel = 0.0;
  double dtilde_active_err = 0.0;
  double lemma3i = -1.0;
  double lemma3ii = -1.0;
  double eq9 = -1.0;
  bool cycle2 = false;
};

struct StepResult {
  std::optional<IterateState> next;  // empty on KKT termination
  IterationRecord record;
  DirectionBundle bundle;
  InvariantSample inv;
  bool bfgs_damped = false;
  bool bfgs_fallback = false;
};

/// One full pass of steps 1-6 from the given state.
StepResult step(const Problem& p, const IterateState& s, const SolverParams& prm,
                EvalCounters& c);

/// Build the k = 0 state: evaluate functions and gradients at x0, B0 = I.
IterateState make_initial_state(const Problem& p, const Vector& x0, EvalCounters& c);

SolveReport solve(const Problem& p, const Vector& x0, const SolverParams& prm = {});

}  // namespace ssfd

#endif  // SSFD_SOLVER_HPP
