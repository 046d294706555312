#ifndef DICKE_SYNTHESIS_HPP
#define DICKE_SYNTHESIS_HPP

#include "dicke/types.hpp"

namespace dicke {

struct SynthesisResult {
  PulseSequence sequence;
  /// Global phase factored out of the target before solving, in [0, 2*pi).
  double removed_global_phase;
};

/// Compiles a target state into at most N pulses. Starting from |J,-J>,
/// pulse m rotates the k = m <-> m+1 transition by the angle that leaves
/// exactly |C_m| behind on level m; its phase steers the accumulated
/// prefactor of the moving amplitude onto arg(C_{m+1}). Propagating the
/// result under the effective two-level dynamics reproduces the
/// (canonicalized) target with fidelity >= 1 - 1e-10.
///
/// Requires target and params to agree on N and strictly positive W, g.
SynthesisResult synthesize(const DickeState& target, const SystemParams& params);

/// Norm sqrt(max(0, 1 - sum_{l<step} |C_l|^2)) still unassigned after the
/// first `step` levels of the target have been consumed, step in 0..N+1.
double remaining_norm(const DickeState& target, int step);

/// W state |J,-J+1>: one exciton shared symmetrically.
DickeState target_w(int n_dots);
/// Equal superposition of the bottom and top of the ladder (N >= 2).
DickeState target_ghz_profile(int n_dots);
/// Equal weight on every Dicke level.
DickeState target_uniform(int n_dots);

}  // namespace dicke

#endif
