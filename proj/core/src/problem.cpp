#include "ssfd/problem.hpp"

#include <cmath>
#include <utility>

#include "ssfd/errors.hpp"

namespace ssfd {

Problem::Problem(std::string name, int n, ScalarFn f0, VectorFn grad_f0,
                 std::vector<ScalarFn> constraints, std::vector<VectorFn> constraint_grads,
                 Vector default_x0, std::optional<double> known_fv)
    : name_(std::move(name)),
      n_(n),
      f0_(std::move(f0)),
      grad_f0_(std::move(grad_f0)),
      constraints_(std::move(constraints)),
      constraint_grads_(std::move(constraint_grads)),
      x0_(std::move(default_x0)),
      known_fv_(known_fv) {
  if (n_ < 1 || constraints_.empty() || constraints_.size() != constraint_grads_.size() ||
      int(x0_.size()) != n_)
    throw ConfigError("Problem '" + name_ + "': inconsistent dimensions");
}

double Problem::objective(const Vector& x, EvalCounters& c) const {
  ++c.nf0;
  const double v = f0_(x);
  if (!std::isfinite(v)) throw NonFiniteValueError(name_ + ": f0 is not finite");
  return v;
}

Vector Problem::objective_gradient(const Vector& x, EvalCounters& c) const {
  ++c.ng0;
  Vector g = grad_f0_(x);
  if (!all_finite(g)) throw NonFiniteValueError(name_ + ": grad f0 is not finite");
  return g;
}

double Problem::constraint(int j, const Vector& x, EvalCounters& c) const {
  ++c.nf;
  const double v = constraints_[j](x);
  if (!std::isfinite(v))
    throw NonFiniteValueError(name_ + ": f_" + std::to_string(j + 1) + " is not finite");
  return v;
}

Vector Problem::constraint_gradient(int j, const Vector& x, EvalCounters& c) const {
  ++c.ng;
  Vector g = constraint_grads_[j](x);
  if (!all_finite(g))
    throw NonFiniteValueError(name_ + ": grad f_" + std::to_string(j + 1) + " is not finite");
  return g;
}

Vector eval_constraints(const Problem& p, const Vector& x, EvalCounters& c) {
  const int m = p.num_constraints();
  Vector f(m);
  for (int j = 0; j < m; ++j) f[j] = p.constraint(j, x, c);
  return f;
}

std::vector<Vector> eval_constraint_gradients(const Problem& p, const Vector& x, EvalCounters& c) {
  const int m = p.num_constraints();
  std::vector<Vector> g(m);
  for (int j = 0; j < m; ++j) g[j] = p.constraint_gradient(j, x, c);
  return g;
}

namespace {

double fd_error(const std::function<double(const Vector&)>& f, const Vector& grad, Vector x) {
  const int n = int(x.size());
  Vector fd(n);
  for (int i = 0; i < n; ++i) {
    const double h = 1e-6 * (1.0 + std::abs(x[i]));
    const double xi = x[i];
    x[i] = xi + h;
    const double fp = f(x);
    x[i] = xi - h;
    const double fm = f(x);
    x[i] = xi;
    if (!std::isfinite(fp) || !std::isfinite(fm))
      throw NonFiniteValueError("check_gradients: function not finite near x");
    fd[i] = (fp - fm) / (2.0 * h);
  }
  double diff = 0.0;
  for (int i = 0; i < n; ++i) diff = std::max(diff, std::abs(grad[i] - fd[i]));
  return diff / std::max(1.0, norm_inf(fd));
}

}  // namespace

double check_gradients(const Problem& p, const Vector& x) {
  EvalCounters scratch;
  double err = fd_error([&](const Vector& y) { return p.objective(y, scratch); },
                        p.objective_gradient(x, scratch), x);
  for (int j = 0; j < p.num_constraints(); ++j) {
    err = std::max(err, fd_error([&](const Vector& y) { return p.constraint(j, y, scratch); },
                                 p.constraint_gradient(j, x, scratch), x));
  }
  return err;
}

}  // namespace ssfd
