#ifndef SSFD_QP_HPP
#define SSFD_QP_HPP

#include <span>
#include <vector>

#include "ssfd/linalg.hpp"

namespace ssfd {

/// Strictly convex inequality-constrained quadratic program
///   min g0'd + 1/2 d'Bd   s.t.  offsets[j] + normals[j]'d <= 0,
/// with all offsets <= 0 so that d = 0 is feasible.
struct QpProblem {
  Matrix B;                     // n x n symmetric positive definite
  Vector g0;                    // n
  std::vector<Vector> normals;  // m constraint gradients, each n
  Vector offsets;               // m shifted constraint values, all <= 0

  int dim() const { return int(g0.size()); }
  int num_constraints() const { return int(offsets.size()); }
};

struct QpSolution {
  Vector d0;
  Vector lambda;            // m, >= 0, zero off the active set
  std::vector<int> active;  // indices with offsets[j] + normals[j]'d0 ~ 0
  double kkt_residual = 0.0;
  int iterations = 0;
};

/// Primal active-set solve. `warm` seeds the working set from a previous
/// solve; only constraints active at d = 0 are kept from it. Throws QpError
/// on cycling (more than 50 (n+m) changes) or reduced-system breakdown.
QpSolution solve_qp(const QpProblem& p, std::span<const int> warm = {});

/// Max violation over stationarity, primal feasibility, multiplier sign and
/// complementarity. Pure; used both by the solver's invariant trace and by
/// tests.
double verify_kkt(const QpProblem& p, const QpSolution& s);

}  // namespace ssfd

#endif  // SSFD_QP_HPP
