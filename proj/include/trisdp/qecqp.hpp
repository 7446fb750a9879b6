#pragma once

#include "trisdp/sdp_model.hpp"
#include "trisdp/types.hpp"

#include <vector>

namespace trisdp {

/// Factor parameterization of the SDP: full n×r factor (nsdp, the
/// Burer–Monteiro model) or lower-triangular n×r factor (tnsdp).
enum class ModelKind { nsdp, tnsdp };

const char* to_string(ModelKind kind);

/// Packed vector length: n·r for nsdp, n·r − r(r−1)/2 for tnsdp.
Index packed_dimension(Index n, Index r, ModelKind kind);

/// Quadratic equality-constrained quadratic program view of the factor model:
///   min ½<Hx,x>  s.t.  ½<G_j x, x> − ½ b_j = 0,
/// where H and G_j act block-diagonally per factor column (block k of the
/// tnsdp model is the data matrix with its first k−1 rows/columns removed).
/// The blocks are never materialized; all products go through n×n
/// matrix–factor multiplies plus pattern restriction.
class QecqpInstance {
 public:
  QecqpInstance(const SdpProblem& p, Index r, ModelKind kind);

  const SdpProblem& problem() const { return *problem_; }
  ModelKind kind() const { return kind_; }
  Index r() const { return r_; }
  Index d() const { return d_; }
  /// Start of column k's slice in the packed vector.
  Index column_offset(Index k) const { return offsets_[static_cast<size_t>(k)]; }
  /// Rows contributed by column k (n for nsdp, n−k for tnsdp).
  Index column_size(Index k) const;

 private:
  const SdpProblem* problem_;  // non-owning; caller keeps the problem alive
  ModelKind kind_;
  Index r_;
  Index d_;
  std::vector<Index> offsets_;
};

inline QecqpInstance build_qecqp(const SdpProblem& p, Index r, ModelKind kind) {
  return QecqpInstance(p, r, kind);
}

/// Column-major flattening of a factor matrix; for tnsdp only the rows on and
/// below the diagonal are stored. Throws when F carries nonzeros above the
/// diagonal under tnsdp.
Vector pack(const Matrix& f, ModelKind kind);

/// Inverse of pack for this instance's (n, r, kind).
Matrix unpack(const Vector& x, const QecqpInstance& inst);

struct QecqpEval {
  Scalar f;
  Vector grad_f;        // d
  Vector g;             // m
  Matrix jac_g;         // d×m, column j = ∇g_j
  Matrix hess_lagrangian;  // d×d, block diagonal, materialized dense
};

/// Objective, constraints, first derivatives, and the Lagrangian Hessian
/// H − Σ μ_j G_j at the packed point x.
QecqpEval evaluate(const QecqpInstance& inst, const Vector& x, const Vector& mu);

}  // namespace trisdp
