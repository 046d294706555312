#ifndef DICKE_HAMILTONIAN_HPP
#define DICKE_HAMILTONIAN_HPP

#include <Eigen/Dense>

#include "dicke/types.hpp"

namespace dicke {

// All builders return exactly Hermitian (N+1)x(N+1) matrices in the Dicke
// basis; conjugate entry pairs are written explicitly, no symmetrization
// pass is applied afterwards.

/// Detuning -W(2J - 2i - 1) that brings the ladder transition
/// k = i <-> i+1 into resonance, i in 0..N-1.
double resonant_detuning(int n_dots, int step_index, double w_coupling);

/// Rotating-frame Hamiltonian
///   delta * Jz + g e^{i phi} J+ + g e^{-i phi} J- - W Jz^2
/// with g and W taken from params. The W J^2 piece is a multiple of the
/// identity on the symmetric sector and is omitted.
Eigen::MatrixXcd build_generic_hamiltonian(const SystemParams& params,
                                           double detuning, double phase);

/// Hamiltonian of one pulse at its resonant detuning, in the gauge where
/// the two resonant levels sit at zero energy: diagonal entries
/// -W(k-i)(k-i-1) and ladder couplings g e^{+-i phi}. Equals
/// build_generic_hamiltonian at resonant_detuning(i) up to an additive
/// multiple of the identity.
Eigen::MatrixXcd build_pulse_hamiltonian(const SystemParams& params,
                                         const PulseSpec& pulse);

/// Rabi frequency Omega_i = g sqrt(J(J+1) - (J-i)(J-i-1)) of the i-th
/// ladder transition.
double effective_rabi(int n_dots, int step_index, double g_amplitude);

/// Two-level reduction of the pulse Hamiltonian, valid for W >> Jg: zero
/// everywhere except the k = i <-> i+1 block, which carries
/// Omega_i e^{+-i phi}.
Eigen::MatrixXcd build_effective_hamiltonian(const SystemParams& params,
                                             const PulseSpec& pulse);

}  // namespace dicke

#endif
