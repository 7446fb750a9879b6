#include "trisdp/factorization.hpp"

#include "trisdp/dense_linalg.hpp"

#include <cmath>

namespace trisdp {

Index max_triangular_rank(Index k) {
  if (k < 1) throw DimensionMismatch("max_triangular_rank: k must be >= 1");
  Index r = 1;
  while ((r + 1) * (r + 2) / 2 <= k) ++r;
  return r;
}

Index heuristic_rank(Index m) {
  if (m < 1) throw DimensionMismatch("heuristic_rank: m must be >= 1");
  Index r = 1;
  while (r * (r + 1) / 2 < m) ++r;
  return r;
}

TriFactor tri_factor(const Matrix& x, Index r) {
  if (x.rows() != x.cols()) throw DimensionMismatch("tri_factor: X not square");
  const Index n = x.rows();
  if (r < 1 || r > n) throw DimensionMismatch("tri_factor: r out of range");

  SymEig eig = sym_eig(symmetrized(x));
  const Scalar lambda_max = std::max(eig.values[n - 1], 0.0);
  if (eig.values[0] < -1e-8 * lambda_max)
    throw NotPsd("tri_factor: matrix has a significant negative eigenvalue");
  const Scalar rank_tol = 1e-8 * std::max(1.0, lambda_max);
  if (n - r - 1 >= 0 && eig.values[n - r - 1] > rank_tol)
    throw RankExceeded("tri_factor: rank exceeds requested column count");

  // Top-r eigenpairs, descending, negatives clamped to zero.
  Matrix u(n, r);
  for (Index k = 0; k < r; ++k) {
    const Scalar lambda = std::max(eig.values[n - 1 - k], 0.0);
    u.col(k) = eig.vectors.col(n - 1 - k) * std::sqrt(lambda);
  }

  QrResult qr = qr_decompose(u.topRows(r).transpose());
  Matrix s(n, r);
  s.topRows(r) = qr.r.transpose();
  if (n > r) s.bottomRows(n - r) = u.bottomRows(n - r) * qr.q;

  // Zero out roundoff above the diagonal and normalize column signs.
  for (Index j = 1; j < r; ++j) s.col(j).head(j).setZero();
  for (Index j = 0; j < r; ++j)
    if (s(j, j) < 0.0) s.col(j) = -s.col(j);
  return {std::move(s), true};
}

Scalar separation_delta(const Matrix& p) {
  if (p.rows() != p.cols())
    throw DimensionMismatch("separation_delta: P not square");
  if (!is_lower_triangular(p))
    throw DimensionMismatch("separation_delta: P not lower triangular");
  for (Index j = 0; j < p.cols(); ++j)
    if (p(j, j) == 0.0)
      throw NotPositiveDefinite(j, 0.0);
  const Matrix gram = symmetrized(p * p.transpose());
  return std::sqrt(sym_eig(gram).values[0]);
}

}  // namespace trisdp
