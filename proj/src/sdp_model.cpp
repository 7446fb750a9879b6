#include "trisdp/sdp_model.hpp"

#include "trisdp/dense_linalg.hpp"

#include <cmath>
#include <utility>

namespace trisdp {

SdpProblem::SdpProblem(Matrix c, std::vector<Matrix> a, Vector b)
    : n_(c.rows()), m_(static_cast<Index>(a.size())), b_(std::move(b)) {
  if (c.rows() != c.cols()) throw DimensionMismatch("SdpProblem: C not square");
  if (m_ < 1) throw DimensionMismatch("SdpProblem: need at least one constraint");
  if (b_.size() != m_) throw DimensionMismatch("SdpProblem: |b| != m");
  c_ = symmetrized(c);
  a_.reserve(a.size());
  for (auto& aj : a) {
    if (aj.rows() != n_ || aj.cols() != n_)
      throw DimensionMismatch("SdpProblem: constraint matrix order mismatch");
    a_.push_back(symmetrized(aj));
  }
}

Vector apply_A(const SdpProblem& p, const Matrix& x) {
  if (x.rows() != p.n() || x.cols() != p.n())
    throw DimensionMismatch("apply_A: order mismatch");
  Vector out(p.m());
  for (Index j = 0; j < p.m(); ++j)
    out[j] = p.a(j).cwiseProduct(x).sum();
  return out;
}

Matrix apply_At(const SdpProblem& p, const Vector& v) {
  if (v.size() != p.m()) throw DimensionMismatch("apply_At: length mismatch");
  Matrix out = Matrix::Zero(p.n(), p.n());
  for (Index j = 0; j < p.m(); ++j) out += v[j] * p.a(j);
  return out;
}

KktResiduals kkt_residuals(const SdpProblem& p, const PrimalDualTriple& t) {
  KktResiduals r;
  r.primal = (apply_A(p, t.x) - p.b()).norm();
  r.dual = (p.c() - apply_At(p, t.y) - t.z).norm();
  r.comp = std::abs(t.x.cwiseProduct(t.z).sum());
  r.min_eig_x = sym_eig(symmetrized(t.x)).values[0];
  r.min_eig_z = sym_eig(symmetrized(t.z)).values[0];
  return r;
}

Scalar accuracy_metric(const SdpProblem& p, const PrimalDualTriple& t) {
  const Scalar primal = (apply_A(p, t.x) - p.b()).norm() / (1.0 + p.b().norm());
  const Scalar obj_p = p.c().cwiseProduct(t.x).sum();
  const Scalar obj_d = p.b().dot(t.y);
  const Scalar comp = std::abs(t.x.cwiseProduct(t.z).sum()) /
                      (1.0 + std::abs(obj_p) + std::abs(obj_d));
  return std::max(primal, comp);
}

Scalar infeasibility(const SdpProblem& p, const PrimalDualTriple& t) {
  const Scalar primal = (apply_A(p, t.x) - p.b()).norm();
  const Matrix slack = symmetrized(p.c() - apply_At(p, t.y));
  const Scalar min_eig = sym_eig(slack).values[0];
  return primal + std::max(-min_eig, 0.0);
}

Scalar duality_gap(const SdpProblem& p, const PrimalDualTriple& t) {
  return p.c().cwiseProduct(t.x).sum() - p.b().dot(t.y);
}

RotatedProblem rotate_to_block_structure(const SdpProblem& p, const Matrix& xref) {
  if (xref.rows() != p.n() || xref.cols() != p.n())
    throw DimensionMismatch("rotate_to_block_structure: order mismatch");
  SymEig eig = sym_eig(symmetrized(xref));
  // Reverse to descending so the large eigenvalues land in the leading block.
  Matrix u = eig.vectors.rowwise().reverse();
  std::vector<Matrix> a_hat;
  a_hat.reserve(static_cast<size_t>(p.m()));
  for (Index j = 0; j < p.m(); ++j)
    a_hat.push_back(symmetrized(u.transpose() * p.a(j) * u));
  Matrix c_hat = symmetrized(u.transpose() * p.c() * u);
  return {SdpProblem(std::move(c_hat), std::move(a_hat), p.b()), std::move(u)};
}

}  // namespace trisdp
