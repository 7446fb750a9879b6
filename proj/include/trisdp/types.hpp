#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace trisdp {

using Scalar = double;
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Base class for all recoverable solver errors.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public SolverError {
 public:
  using SolverError::SolverError;
};

/// Eigensolver did not converge within its iteration cap.
class KernelFailure : public SolverError {
 public:
  using SolverError::SolverError;
};

/// Cholesky hit a non-positive pivot; `pivot()` is the 0-based index.
class NotPositiveDefinite : public SolverError {
 public:
  NotPositiveDefinite(Index pivot, Scalar value)
      : SolverError("matrix not positive definite: pivot " +
                    std::to_string(pivot) + " is " + std::to_string(value)),
        pivot_(pivot),
        value_(value) {}
  Index pivot() const { return pivot_; }
  Scalar value() const { return value_; }

 private:
  Index pivot_;
  Scalar value_;
};

/// Symmetric solve failed even at the largest regularization level.
class SingularSystem : public SolverError {
 public:
  using SolverError::SolverError;
};

class RankExceeded : public SolverError {
 public:
  using SolverError::SolverError;
};

class NotPsd : public SolverError {
 public:
  using SolverError::SolverError;
};

class NotStationary : public SolverError {
 public:
  using SolverError::SolverError;
};

class Diverged : public SolverError {
 public:
  using SolverError::SolverError;
};

class LinearSolveFailure : public SolverError {
 public:
  using SolverError::SolverError;
};

/// File format error; `line()` is the 1-based offending line (0 if unknown).
class ParseError : public SolverError {
 public:
  ParseError(const std::string& what, long line = 0)
      : SolverError(line > 0 ? "line " + std::to_string(line) + ": " + what
                             : what),
        line_(line) {}
  long line() const { return line_; }

 private:
  long line_;
};

/// Exact symmetrization (M + Mᵀ)/2.
inline Matrix symmetrized(const Matrix& m) { return 0.5 * (m + m.transpose()); }

/// True if every entry strictly above the diagonal is exactly zero.
inline bool is_lower_triangular(const Matrix& m) {
  for (Index j = 1; j < m.cols(); ++j)
    for (Index i = 0; i < std::min(j, m.rows()); ++i)
      if (m(i, j) != 0.0) return false;
  return true;
}

}  // namespace trisdp
