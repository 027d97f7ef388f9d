#ifndef SSFD_ERRORS_HPP
#define SSFD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ssfd {

/// Base class for all recoverable solver errors.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A pivot fell below the singularity threshold during LU factorization.
class SingularMatrixError : public SolverError {
 public:
  using SolverError::SolverError;
};

/// A Cholesky pivot was nonpositive: the matrix is not positive definite.
class NotPositiveDefiniteError : public SolverError {
 public:
  using SolverError::SolverError;
};

/// A function or gradient evaluation produced NaN or Inf.
class NonFiniteValueError : public SolverError {
 public:
  using SolverError::SolverError;
};

/// The QP active-set loop failed (cycling guard or numerical breakdown).
class QpError : public SolverError {
 public:
  using SolverError::SolverError;
};

/// A line search exhausted its trial budget.
class LineSearchError : public SolverError {
 public:
  using SolverError::SolverError;
};

/// Bad run configuration (unknown problem, malformed parameter file, ...).
class ConfigError : public SolverError {
 public:
  using SolverError::SolverError;
};

}  // namespace ssfd

#endif  // SSFD_ERRORS_HPP
