#ifndef SSFD_PROBLEM_HPP
#define SSFD_PROBLEM_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ssfd/linalg.hpp"

namespace ssfd {

/// Evaluation counters for one solver run. nf counts individual scalar
/// constraint evaluations (one call of one constraint = 1).
struct EvalCounters {
  long nf0 = 0;
  long nf = 0;
  long ng0 = 0;
  long ng = 0;
};

/// An inequality-constrained NLP: min f0(x) s.t. f_j(x) <= 0, j = 1..m.
/// Evaluators are deterministic and side-effect free; gradients are
/// user-supplied analytics.
class Problem {
 public:
  using ScalarFn = std::function<double(const Vector&)>;
  using VectorFn = std::function<Vector(const Vector&)>;

  Problem(std::string name, int n, ScalarFn f0, VectorFn grad_f0,
          std::vector<ScalarFn> constraints, std::vector<VectorFn> constraint_grads,
          Vector default_x0, std::optional<double> known_fv = std::nullopt);

  const std::string& name() const { return name_; }
  int dim() const { return n_; }
  int num_constraints() const { return int(constraints_.size()); }
  const Vector& default_x0() const { return x0_; }
  std::optional<double> known_fv() const { return known_fv_; }

  double objective(const Vector& x, EvalCounters& c) const;
  Vector objective_gradient(const Vector& x, EvalCounters& c) const;
  double constraint(int j, const Vector& x, EvalCounters& c) const;
  Vector constraint_gradient(int j, const Vector& x, EvalCounters& c) const;

 private:
  std::string name_;
  int n_;
  ScalarFn f0_;
  VectorFn grad_f0_;
  std::vector<ScalarFn> constraints_;
  std::vector<VectorFn> constraint_grads_;
  Vector x0_;
  std::optional<double> known_fv_;
};

/// All m constraint values at x; bumps c.nf by m. Throws NonFiniteValueError
/// if any value is NaN/Inf.
Vector eval_constraints(const Problem& p, const Vector& x, EvalCounters& c);

/// All constraint gradients at x; bumps c.ng by m.
std::vector<Vector> eval_constraint_gradients(const Problem& p, const Vector& x, EvalCounters& c);

/// Max relative error between analytic gradients and central differences
/// with per-coordinate step 1e-6 (1 + |x_i|), over the objective and every
/// constraint.
double check_gradients(const Problem& p, const Vector& x);

}  // namespace ssfd

#endif  // SSFD_PROBLEM_HPP
