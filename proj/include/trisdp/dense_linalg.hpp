#pragma once

#include "trisdp/types.hpp"

namespace trisdp {

/// Symmetric eigendecomposition, eigenvalues sorted ascending.
struct SymEig {
  Vector values;   // ascending
  Matrix vectors;  // orthonormal columns, M = V diag(values) Vᵀ
};

SymEig sym_eig(const Matrix& m);

/// QR factorization of a square matrix with the sign convention that the
/// diagonal of R is nonnegative wherever the corresponding column is nonzero.
struct QrResult {
  Matrix q;  // orthogonal
  Matrix r;  // upper triangular
};

QrResult qr_decompose(const Matrix& m);

/// Lower Cholesky factor with positive diagonal. Throws NotPositiveDefinite
/// (carrying the failing pivot index) when the input is not PD.
Matrix cholesky_lower(const Matrix& m);

struct IndefiniteSolve {
  Vector solution;
  Scalar regularization = 0.0;  // diagonal shift that was accepted
};

/// Solves K·x = rhs for symmetric (possibly indefinite) K. On near-singular
/// systems retries with escalating diagonal shifts rho in
/// {1e-12, ..., 1e-6}·(1 + ||K||_F); a candidate is accepted when the
/// residual against the unshifted K satisfies
/// ||K·x − rhs|| <= 1e-10·(||K||_F·||x|| + ||rhs||).
/// Throws SingularSystem when no shift level is acceptable.
IndefiniteSolve solve_sym_indefinite(const Matrix& k, const Vector& rhs);

}  // namespace trisdp
