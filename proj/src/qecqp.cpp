#include "trisdp/qecqp.hpp"

namespace trisdp {

const char* to_string(ModelKind kind) {
  return kind == ModelKind::nsdp ? "nsdp" : "tnsdp";
}

Index packed_dimension(Index n, Index r, ModelKind kind) {
  if (r < 1 || r > n) throw DimensionMismatch("packed_dimension: r out of range");
  return kind == ModelKind::nsdp ? n * r : n * r - r * (r - 1) / 2;
}

QecqpInstance::QecqpInstance(const SdpProblem& p, Index r, ModelKind kind)
    : problem_(&p), kind_(kind), r_(r) {
  d_ = packed_dimension(p.n(), r, kind);
  offsets_.reserve(static_cast<size_t>(r));
  Index off = 0;
  for (Index k = 0; k < r; ++k) {
    offsets_.push_back(off);
    off += column_size(k);
  }
}

Index QecqpInstance::column_size(Index k) const {
  return kind_ == ModelKind::nsdp ? problem_->n() : problem_->n() - k;
}

Vector pack(const Matrix& f, ModelKind kind) {
  const Index n = f.rows();
  const Index r = f.cols();
  Vector x(packed_dimension(n, r, kind));
  Index off = 0;
  for (Index k = 0; k < r; ++k) {
    if (kind == ModelKind::tnsdp) {
      if ((f.col(k).head(k).array() != 0.0).any())
        throw DimensionMismatch("pack: nonzero above the diagonal");
      x.segment(off, n - k) = f.col(k).tail(n - k);
      off += n - k;
    } else {
      x.segment(off, n) = f.col(k);
      off += n;
    }
  }
  return x;
}

Matrix unpack(const Vector& x, const QecqpInstance& inst) {
  if (x.size() != inst.d()) throw DimensionMismatch("unpack: length mismatch");
  const Index n = inst.problem().n();
  Matrix f = Matrix::Zero(n, inst.r());
  for (Index k = 0; k < inst.r(); ++k) {
    const Index len = inst.column_size(k);
    f.col(k).tail(len) = x.segment(inst.column_offset(k), len);
  }
  return f;
}

namespace {

// Packs the pattern restriction of an n×r dense matrix: under tnsdp the
// entries above the diagonal are dropped (they correspond to removed rows of
// the blocks), under nsdp everything is kept.
Vector pack_restricted(const Matrix& w, const QecqpInstance& inst) {
  Vector out(inst.d());
  const Index n = w.rows();
  for (Index k = 0; k < inst.r(); ++k) {
    const Index len = inst.column_size(k);
    out.segment(inst.column_offset(k), len) = w.col(k).tail(len);
  }
  return out;
}

}  // namespace

QecqpEval evaluate(const QecqpInstance& inst, const Vector& x, const Vector& mu) {
  const SdpProblem& p = inst.problem();
  if (mu.size() != p.m()) throw DimensionMismatch("evaluate: |mu| != m");
  const Matrix f = unpack(x, inst);

  QecqpEval out;
  const Matrix cf = p.c() * f;
  out.f = 0.5 * f.cwiseProduct(cf).sum();
  out.grad_f = pack_restricted(cf, inst);

  out.g.resize(p.m());
  out.jac_g.resize(inst.d(), p.m());
  for (Index j = 0; j < p.m(); ++j) {
    const Matrix af = p.a(j) * f;
    out.g[j] = 0.5 * f.cwiseProduct(af).sum() - 0.5 * p.b()[j];
    out.jac_g.col(j) = pack_restricted(af, inst);
  }

  // Lagrangian Hessian: block k is M = C − Σ μ_j A_j with the first k rows
  // and columns removed (tnsdp) or M itself (nsdp).
  Matrix m = p.c();
  for (Index j = 0; j < p.m(); ++j) m -= mu[j] * p.a(j);
  out.hess_lagrangian = Matrix::Zero(inst.d(), inst.d());
  for (Index k = 0; k < inst.r(); ++k) {
    const Index len = inst.column_size(k);
    const Index off = inst.column_offset(k);
    out.hess_lagrangian.block(off, off, len, len) =
        m.bottomRightCorner(len, len);
  }
  return out;
}

}  // namespace trisdp
