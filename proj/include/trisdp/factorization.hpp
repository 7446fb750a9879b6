#pragma once

#include "trisdp/types.hpp"

namespace trisdp {

/// Largest r with r(r+1)/2 <= k.
Index max_triangular_rank(Index k);

/// Smallest r with r(r+1)/2 >= m; equals ceil((sqrt(8m+1)−1)/2) exactly.
Index heuristic_rank(Index m);

/// Lower-triangular factor S (n×r, [S]_{ij} = 0 for i < j) with X = S·Sᵀ.
struct TriFactor {
  Matrix s;
  bool sign_normalized = true;  // nonzero diagonal entries are >= 0
};

/// Triangular low-rank factorization of a PSD matrix with rank(X) <= r:
/// take the top-r scaled eigenvectors U, QR-triangularize the leading r×r
/// block via U1ᵀ = QR, and assemble S = [Rᵀ; U2·Q]. Columns are sign-flipped
/// so every nonzero diagonal entry of S is positive.
/// Throws NotPsd when λ_min < −1e-8·λ_max and RankExceeded when eigenvalue
/// r+1 exceeds 1e-8·max(1, λ_max).
TriFactor tri_factor(const Matrix& x, Index r);

/// Separation radius of Lemma-style factor uniqueness: sqrt(λ_min(P·Pᵀ))
/// for a full-rank square lower-triangular P.
Scalar separation_delta(const Matrix& p);

}  // namespace trisdp
