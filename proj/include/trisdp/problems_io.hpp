#pragma once

#include "trisdp/sdp_model.hpp"

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace trisdp {

/// Random standard-form SDP with a strictly interior embedded triple:
/// b := A(X0) and C := A*(y0) + Z0 with X0, Z0 shifted Gram matrices, so both
/// sides are strictly feasible by construction (the triple is interior, not
/// optimal).
struct GeneratedSdp {
  SdpProblem problem;
  PrimalDualTriple interior;
};

GeneratedSdp gen_random_sdp(Index n, Index m, std::uint64_t seed);

/// Max-cut relaxation: C = ¼(B − diag(B·e)) for a random weighted adjacency
/// matrix B (edge probability = density, weights uniform in [0,1]),
/// constraints fix diag(X) = 1, so m = n.
SdpProblem gen_maxcut(Index n, double density, std::uint64_t seed);

/// Operator-norm minimization min over complex z of ||Σ z_k B_k + B0||_2,
/// posed as a primal standard-form SDP over the real embedding of the
/// Hermitian LMI blocks. The embedding doubles the matrix order to 2(p+q)
/// and preserves the spectrum (each eigenvalue twice), so the embedded SDP's
/// optimal value equals the complex one. The SDP minimizes −t: recover the
/// norm as −<C,X*> (or as the first dual multiplier).
struct NormMinInstance {
  SdpProblem problem;
  std::vector<Matrix> b_mats;  // B_0..B_m, each p×q
  Index p = 0;
  Index q = 0;
  Index zdim = 0;  // m, number of complex coefficients

  /// ||B0 + Σ (x_k + i·y_k) B_k||_2 by singular value decomposition.
  Scalar norm_at(const Vector& zx, const Vector& zy) const;
  /// Norm value implied by a solver objective on this instance.
  static Scalar norm_from_objective(Scalar objective) { return -objective; }
};

NormMinInstance gen_normmin(Index p, Index q, Index m, std::uint64_t seed);

/// SDPA sparse format (".dat-s"), single dense block on write; multi-block
/// files are densified into one block-diagonal matrix on read. Entries are
/// written with 17 significant digits so write→read→write is byte-identical.
SdpProblem read_sdpa(const std::string& path);
void write_sdpa(const SdpProblem& p, const std::string& path);

/// Generator metadata sidecar: {"family", dims, "seed", "format_version": 1}.
void write_sidecar(const std::string& path, const std::string& family,
                   const std::vector<std::pair<std::string, Index>>& dims,
                   std::uint64_t seed, double density = -1.0);

}  // namespace trisdp
