#include "trisdp/sqp.hpp"

#include "trisdp/dense_linalg.hpp"

#include <Eigen/QR>

#include <chrono>
#include <cmath>
#include <string>

namespace trisdp {

namespace {

SqpState step_from_eval(const QecqpInstance& inst, const SqpState& state,
                        const QecqpEval& eval) {
  const Index d = inst.d();
  const Index m = inst.problem().m();

  // Symmetrized bordered system: [[W, J],[Jᵀ, 0]]·(ξ, −ζ) = (−∇f, −g).
  Matrix k = Matrix::Zero(d + m, d + m);
  k.topLeftCorner(d, d) = eval.hess_lagrangian;
  k.topRightCorner(d, m) = eval.jac_g;
  k.bottomLeftCorner(m, d) = eval.jac_g.transpose();
  Vector rhs(d + m);
  rhs.head(d) = -eval.grad_f;
  rhs.tail(m) = -eval.g;

  IndefiniteSolve sol;
  try {
    sol = solve_sym_indefinite(k, rhs);
  } catch (const SingularSystem&) {
    const auto rank = eval.jac_g.colPivHouseholderQr().rank();
    throw SingularSystem("sqp_step: singular KKT system (constraint Jacobian rank " +
                         std::to_string(rank) + " of " + std::to_string(m) + ")");
  }
  SqpState next;
  next.x = state.x + sol.solution.head(d);
  next.mu = -sol.solution.tail(m);
  return next;
}

}  // namespace

SqpState sqp_step(const QecqpInstance& inst, const SqpState& state) {
  return step_from_eval(inst, state, evaluate(inst, state.x, state.mu));
}

PrimalDualTriple state_triple(const QecqpInstance& inst, const SqpState& state) {
  const Matrix f = unpack(state.x, inst);
  PrimalDualTriple t;
  t.x = symmetrized(f * f.transpose());
  t.y = state.mu;
  t.z = inst.problem().c() - apply_At(inst.problem(), state.mu);
  return t;
}

SolveReport solve(const QecqpInstance& inst, const SqpState& state0,
                  const SqpConfig& config) {
  if (config.max_iter < 1) throw DimensionMismatch("solve: max_iter must be >= 1");
  const SdpProblem& p = inst.problem();
  const Scalar diverge_bound = 1e8 * (1.0 + state0.x.norm());

  const auto t0 = std::chrono::steady_clock::now();
  SolveReport report;
  SqpState state = state0;
  SqpState best = state0;
  Scalar best_e = std::numeric_limits<Scalar>::infinity();

  for (int k = 0;; ++k) {
    const Scalar e = accuracy_metric(p, state_triple(inst, state));
    report.e_history.push_back(e);
    if (e < best_e) {
      best_e = e;
      best = state;
    }
    if (e <= config.eps) {
      report.iterations = k;
      report.criterion_met = true;
      best = state;
      break;
    }
    if (k == config.max_iter) {
      report.iterations = k;
      break;
    }
    state = step_from_eval(inst, state, evaluate(inst, state.x, state.mu));
    if (state.x.norm() > diverge_bound)
      throw Diverged("solve: iterate norm exceeded the divergence guard");
  }

  report.state = best;
  const PrimalDualTriple t = state_triple(inst, report.state);
  report.e = accuracy_metric(p, t);
  report.objective = p.c().cwiseProduct(t.x).sum();
  report.gap = duality_gap(p, t);
  const Scalar primal = (apply_A(p, t.x) - p.b()).norm();
  report.certificate_margin = sym_eig(t.z).values[0];
  report.infeas = primal + std::max(-report.certificate_margin, 0.0);
  report.sqp_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
  return report;
}

Certificate certify_optimality(const SdpProblem& p, const Matrix& f,
                               const Vector& mu, Scalar tol) {
  Certificate cert;
  const Matrix slack = symmetrized(p.c() - apply_At(p, mu));
  cert.margin = sym_eig(slack).values[0];
  cert.stationarity = (slack * f).norm();
  cert.primal_residual =
      (apply_A(p, symmetrized(f * f.transpose())) - p.b()).norm();
  cert.certified = cert.margin >= -tol &&
                   cert.stationarity <= tol * (1.0 + p.c().norm()) &&
                   cert.primal_residual <= tol * (1.0 + p.b().norm());
  return cert;
}

StrictnessProbe strictness_probe(const QecqpInstance& inst,
                                 const SqpState& state, Scalar tol) {
  const QecqpEval eval = evaluate(inst, state.x, state.mu);
  const Vector grad_lag = eval.grad_f - eval.jac_g * state.mu;
  const Scalar scale =
      1.0 + eval.grad_f.norm() + eval.jac_g.norm() * state.mu.norm();
  if (grad_lag.norm() > 1e-6 * scale)
    throw NotStationary("strictness_probe: state is not stationary");

  // Null-space basis of ∇gᵀ from the Jacobian Gram matrix.
  const Matrix gram = symmetrized(eval.jac_g * eval.jac_g.transpose());
  const SymEig eig = sym_eig(gram);
  const Scalar cutoff = 1e-10 * eval.jac_g.squaredNorm();
  Index null_dim = 0;
  while (null_dim < eig.values.size() && eig.values[null_dim] <= cutoff)
    ++null_dim;

  StrictnessProbe probe;
  if (null_dim == 0) {
    // Zero-dimensional reduced space: strict by convention.
    probe.lambda_min_reduced = std::numeric_limits<Scalar>::infinity();
    probe.nullity = 0;
    probe.strict = true;
    return probe;
  }
  const Matrix basis = eig.vectors.leftCols(null_dim);
  const Matrix reduced =
      symmetrized(basis.transpose() * eval.hess_lagrangian * basis);
  const SymEig reduced_eig = sym_eig(reduced);
  probe.lambda_min_reduced = reduced_eig.values[0];
  probe.nullity = static_cast<int>(
      (reduced_eig.values.array().abs() <= tol).count());
  probe.strict = probe.lambda_min_reduced > 0.0;
  return probe;
}

}  // namespace trisdp
