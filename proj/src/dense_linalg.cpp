#include "trisdp/dense_linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include <cmath>

namespace trisdp {

SymEig sym_eig(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("sym_eig: matrix not square");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
  if (solver.info() != Eigen::Success)
    throw KernelFailure("sym_eig: eigensolver did not converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

QrResult qr_decompose(const Matrix& m) {
  if (m.rows() != m.cols())
    throw DimensionMismatch("qr_decompose: matrix not square");
  Eigen::HouseholderQR<Matrix> qr(m);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix signs so the diagonal of R is nonnegative.
  for (Index k = 0; k < m.cols(); ++k) {
    if (r(k, k) < 0.0) {
      r.row(k) = -r.row(k);
      q.col(k) = -q.col(k);
    }
  }
  return {std::move(q), std::move(r)};
}

Matrix cholesky_lower(const Matrix& m) {
  if (m.rows() != m.cols())
    throw DimensionMismatch("cholesky_lower: matrix not square");
  const Index n = m.rows();
  Matrix l = Matrix::Zero(n, n);
  for (Index j = 0; j < n; ++j) {
    Scalar pivot = m(j, j) - l.row(j).head(j).squaredNorm();
    if (pivot <= 0.0) throw NotPositiveDefinite(j, pivot);
    l(j, j) = std::sqrt(pivot);
    for (Index i = j + 1; i < n; ++i)
      l(i, j) = (m(i, j) - l.row(i).head(j).dot(l.row(j).head(j))) / l(j, j);
  }
  return l;
}

IndefiniteSolve solve_sym_indefinite(const Matrix& k, const Vector& rhs) {
  if (k.rows() != k.cols() || k.rows() != rhs.size())
    throw DimensionMismatch("solve_sym_indefinite: shape mismatch");
  const Scalar norm_k = k.norm();
  const Scalar scale = 1.0 + norm_k;

  auto acceptable = [&](const Vector& x) {
    if (!x.allFinite()) return false;
    const Scalar residual = (k * x - rhs).norm();
    return residual <= 1e-10 * (norm_k * x.norm() + rhs.norm());
  };

  // Unshifted attempt first, then the escalation schedule.
  for (int level = -1; level <= 6; ++level) {
    const Scalar rho = level < 0 ? 0.0 : std::pow(10.0, -12 + level) * scale;
    Matrix shifted = k;
    shifted.diagonal().array() += rho;
    Eigen::LDLT<Matrix> ldlt(shifted);
    if (ldlt.info() != Eigen::Success) continue;
    Vector x = ldlt.solve(rhs);
    if (acceptable(x)) return {std::move(x), rho};
  }
  throw SingularSystem("solve_sym_indefinite: singular at all shift levels");
}

}  // namespace trisdp
