#pragma once

#include "trisdp/types.hpp"

#include <vector>

namespace trisdp {

/// Equality-constrained SDP in primal standard form:
///   min <C, X>  s.t.  <A_j, X> = b_j (j = 1..m),  X PSD.
/// Construction symmetrizes C and every A_j exactly.
class SdpProblem {
 public:
  SdpProblem(Matrix c, std::vector<Matrix> a, Vector b);

  Index n() const { return n_; }
  Index m() const { return m_; }
  const Matrix& c() const { return c_; }
  const Matrix& a(Index j) const { return a_[static_cast<size_t>(j)]; }
  const std::vector<Matrix>& a() const { return a_; }
  const Vector& b() const { return b_; }

 private:
  Index n_ = 0;
  Index m_ = 0;
  Matrix c_;
  std::vector<Matrix> a_;
  Vector b_;
};

struct PrimalDualTriple {
  Matrix x;
  Vector y;
  Matrix z;
};

/// The constraint operator: component j is <A_j, X>.
Vector apply_A(const SdpProblem& p, const Matrix& x);

/// Its adjoint: sum_j v_j A_j.
Matrix apply_At(const SdpProblem& p, const Vector& v);

struct KktResiduals {
  Scalar primal;     // ||A(X) − b||
  Scalar dual;       // ||C − A*(y) − Z||_F
  Scalar comp;       // |<X, Z>|
  Scalar min_eig_x;
  Scalar min_eig_z;
};

KktResiduals kkt_residuals(const SdpProblem& p, const PrimalDualTriple& t);

/// E(X,y,Z) = max{ ||A(X)−b||/(1+||b||), |<X,Z>|/(1+|<C,X>|+|<b,y>|) }.
Scalar accuracy_metric(const SdpProblem& p, const PrimalDualTriple& t);

/// ||A(X) − b|| + max{−λ_min(C − A*(y)), 0}.
Scalar infeasibility(const SdpProblem& p, const PrimalDualTriple& t);

/// <C, X> − <b, y>.
Scalar duality_gap(const SdpProblem& p, const PrimalDualTriple& t);

struct RotatedProblem {
  SdpProblem problem;  // Ĉ = UᵀCU, Â_j = UᵀA_jU, b unchanged
  Matrix rotation;     // U, orthogonal
};

/// Congruence-rotates the problem data by the eigenbasis of Xref so that
/// Uᵀ·Xref·U is diagonal with eigenvalues sorted descending (large mass in
/// the leading block). Points map as X̂ = UᵀXU, Ẑ = UᵀZU, y unchanged.
RotatedProblem rotate_to_block_structure(const SdpProblem& p, const Matrix& xref);

}  // namespace trisdp
