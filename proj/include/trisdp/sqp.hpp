#pragma once

#include "trisdp/qecqp.hpp"

#include <limits>
#include <vector>

namespace trisdp {

struct SqpState {
  Vector x;   // packed factor
  Vector mu;  // multipliers; equal to the SDP dual y on both models
};

struct SqpConfig {
  Scalar eps = 1e-8;  // stop when E(X,y,Z) <= eps; 0 runs all iterations
  int max_iter = 100;
};

struct SolveReport {
  SqpState state;                  // reported iterate (best E if capped)
  int iterations = 0;              // Newton steps taken
  std::vector<Scalar> e_history;   // E at every visited iterate
  bool criterion_met = false;
  Scalar e = 0.0;
  Scalar infeas = 0.0;
  Scalar gap = 0.0;
  Scalar objective = 0.0;                // <C, X> on SDP scale
  Scalar certificate_margin = 0.0;       // λ_min(C − A*(mu))
  Scalar strict_lambda_min =
      std::numeric_limits<Scalar>::quiet_NaN();  // set by the probe
  int strict_nullity = -1;
  double warm_ms = 0.0;  // filled by the driver
  double sqp_ms = 0.0;
};

/// One full Newton-KKT step: solves
///   [ ∇²xxL  −∇g ] [ξ]   [∇f]
///   [ ∇gᵀ      0 ] [ζ] = −[g ]
/// and returns (x + ξ, ζ). The solve goes through the symmetrized bordered
/// system. SingularSystem failures are rethrown with the constraint Jacobian
/// rank attached.
SqpState sqp_step(const QecqpInstance& inst, const SqpState& state);

/// Reconstructs the primal-dual triple this state encodes:
/// X = F·Fᵀ, y = mu, Z = C − A*(mu).
PrimalDualTriple state_triple(const QecqpInstance& inst, const SqpState& state);

/// Iterates sqp_step until E(X,y,Z) <= eps or the iteration cap; when capped,
/// the best-E iterate is reported. Aborts with Diverged when the iterate norm
/// exceeds 1e8·(1 + ||x0||).
SolveReport solve(const QecqpInstance& inst, const SqpState& state0,
                  const SqpConfig& config);

struct Certificate {
  bool certified = false;
  Scalar margin = 0.0;         // λ_min(C − A*(mu))
  Scalar stationarity = 0.0;   // ||(C − A*(mu))·F||_F
  Scalar primal_residual = 0.0;
};

/// Global optimality check from the dual side: mu certifies F when the dual
/// slack is PSD within tol, (C − A*(mu))·F vanishes within tol·(1+||C||_F),
/// and the primal residual is within tol·(1+||b||).
Certificate certify_optimality(const SdpProblem& p, const Matrix& f,
                               const Vector& mu, Scalar tol);

struct StrictnessProbe {
  Scalar lambda_min_reduced = 0.0;  // +inf sentinel when the null space is {0}
  int nullity = 0;                  // reduced eigenvalues inside [−tol, tol]
  bool strict = false;
};

/// Second-order test at an approximately stationary state: eigenvalues of the
/// Lagrangian Hessian projected onto the null space of ∇gᵀ. Positive λ_min
/// certifies a strict local optimum; near-zero eigenvalues count as nullity
/// (the flat rotation directions of the full-factor model show up here).
StrictnessProbe strictness_probe(const QecqpInstance& inst,
                                 const SqpState& state, Scalar tol);

}  // namespace trisdp
