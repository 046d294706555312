#ifndef DICKE_PROPAGATION_HPP
#define DICKE_PROPAGATION_HPP

#include <optional>
#include <utility>
#include <vector>

#include "dicke/types.hpp"

namespace dicke {

enum class PropagationMode { Effective, Full };

/// Trajectory of one sequence run. Snapshots hold the state after each
/// pulse; ordinal 0 is the initial state. leakage_per_pulse is filled in
/// full mode only: population pushed outside the driven two-level pair
/// during each pulse, clamped to [0, 1].
struct SimulationRecord {
  PropagationMode mode;
  std::vector<std::pair<int, DickeState>> snapshots;
  DickeState final_state;
  std::optional<double> target_fidelity;
  std::vector<double> leakage_per_pulse;
};

/// Closed-form rotation exp(-i H_eff tau) on levels {i, i+1}:
///   a_i     ->  cos(Omega tau) a_i - i e^{-i phi} sin(Omega tau) a_{i+1}
///   a_{i+1} -> -i e^{i phi} sin(Omega tau) a_i + cos(Omega tau) a_{i+1}
/// with every other amplitude untouched.
DickeState evolve_effective(const DickeState& state, const PulseSpec& pulse,
                            const SystemParams& params);

/// Exact propagation under the full pulse Hamiltonian, evaluated in the
/// pulse's own interaction frame: U = exp(+i D tau) exp(-i H tau) with D
/// the static diagonal of H. The off-resonant couplings act in full (they
/// produce the leakage and block distortion that the two-level picture
/// neglects) while the deterministic spectator phases of the bare
/// diagonal are removed, so effective and full mode evolve the same
/// amplitudes and converge as W/g grows. exp(-i H tau) is computed by
/// spectral decomposition of the Hermitian matrix; no integrator error.
DickeState evolve_full(const DickeState& state, const PulseSpec& pulse,
                       const SystemParams& params);

/// Left-fold of the per-pulse propagator selected by mode, recording a
/// snapshot after every pulse. Computes fidelity against target when one
/// is supplied; in full mode records per-pulse leakage.
SimulationRecord run_sequence(const DickeState& initial, const PulseSequence& seq,
                              PropagationMode mode,
                              const std::optional<DickeState>& target = std::nullopt);

struct RwaSweepPoint {
  double ratio;           // W / g
  double fidelity;        // full-mode fidelity against the target
  double total_duration;  // sum of pulse durations (inverse-energy units)
};

/// Re-synthesizes the target at each coupling ratio W/g (the pulse angles
/// and phases do not depend on W; only the full Hamiltonian does) and
/// full-propagates from |J,-J>. Ratios must be positive and ascending.
std::vector<RwaSweepPoint> rwa_sweep(const DickeState& target,
                                     const SystemParams& params_base,
                                     const std::vector<double>& ratios);

}  // namespace dicke

#endif
