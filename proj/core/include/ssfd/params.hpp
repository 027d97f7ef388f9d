#ifndef SSFD_PARAMS_HPP
#define SSFD_PARAMS_HPP

namespace ssfd {

/// Scalar parameters of the solver. Defaults are the benchmark settings:
/// gamma=eta=0.5, theta=varrho=0.4, sigma=0.6, xi=1, zeta=0.2, alpha=0.3,
/// rho=1.5, delta=3, tau=2.5, ls_epsilon=0.125, tol_d0=1e-6.
struct SolverParams {
  double gamma = 0.5;       // (0,1) step-5 sufficient-decrease factor
  double eta = 0.5;         // (0,1) step-5 backtracking ratio
  double theta = 0.4;       // (0,sigma) tilt exponent
  double sigma = 0.6;       // (theta,1) infeasibility exponent
  double varrho = 0.4;      // (0,sigma) acceptance-test exponent
  double xi = 1.0;          // > 0 acceptance-test weight
  double zeta = 0.2;        // > 0 acceptance-test weight
  double alpha = 0.3;       // (0,0.5) step-3 sufficient-decrease factor
  double rho = 1.5;         // > 1 infeasible-phase relaxation
  double delta = 3.0;       // > 2 acceptance-test exponent
  double tau = 2.5;         // (2,3) correction exponent
  double ls_epsilon = 0.125;  // (0,1) step-3 cutoff; trials are {1,1/2,...,>=eps}
  double tol_d0 = 1e-6;     // stopping threshold on ||d0||

  int max_iter = 500;
  int max_step5_backtracks = 60;

  bool warm_start_qp = true;    // seed QP active set from the previous iteration
  bool check_invariants = true; // record per-iteration invariant residuals

  /// Throws ConfigError when any interval constraint is violated.
  void validate() const;
};

}  // namespace ssfd

#endif  // SSFD_PARAMS_HPP
