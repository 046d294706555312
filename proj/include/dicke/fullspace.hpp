#ifndef DICKE_FULLSPACE_HPP
#define DICKE_FULLSPACE_HPP

#include <Eigen/Dense>

#include "dicke/types.hpp"

namespace dicke {

// Brute-force construction of the collective operators in the full 2^N
// product space of N two-level dots (bit p of the basis index = exciton
// in dot p), used to cross-check the (N+1)-dimensional Dicke
// representation. Dense matrices; N is capped at 12.

inline constexpr int kFullspaceMaxDots = 12;

struct FullspaceOps {
  Eigen::MatrixXcd jz;
  Eigen::MatrixXcd jplus;
  Eigen::MatrixXcd jminus;
};

/// Sums of single-dot raising/lowering/half-occupation operators over all
/// N sites, as 2^N x 2^N matrices. Throws ResourceError above the cap.
FullspaceOps build_fullspace_collective(int n_dots);

/// (N+1) x 2^N isometry whose rows are the symmetric Dicke vectors:
/// row k is the normalized sum over all product states with k excitons,
/// weight 1/sqrt(C(N,k)). Rows are orthonormal: S S^dagger = I.
Eigen::MatrixXcd build_symmetric_isometry(int n_dots);

/// Full-space rotating-frame Hamiltonian
///   delta Jz + g e^{i phi} J+ + g e^{-i phi} J- + W (J^2 - Jz^2)
/// assembled from the collective operators. J^2 is not a constant on the
/// full space, so the quadratic term is kept in full.
Eigen::MatrixXcd build_fullspace_hamiltonian(const SystemParams& params,
                                             double detuning, double phase);

/// Maximum elementwise deviations between the restricted full-space
/// operators S O S^dagger and their Dicke-basis counterparts, plus the
/// symmetric-sector conservation checks.
struct RestrictionReport {
  int n_dots;
  double isometry_deviation;    // || S S^dagger - I ||_max
  double jz_deviation;
  double jplus_deviation;
  double jminus_deviation;
  double hamiltonian_deviation; // restricted pulse Hamiltonians vs Dicke build
  double projector_deviation;   // || [H_full, S^dagger S] ||_max over all pulses
  double max_deviation() const;
};

/// Restricts Jz, J+, J- and the pulse Hamiltonian of every step index to
/// the symmetric sector and compares against the Dicke-basis matrices;
/// also verifies the full-space Hamiltonian commutes with the symmetric
/// projector, i.e. the dynamics never leaves the Dicke sector.
RestrictionReport crosscheck_dicke_restriction(int n_dots);

}  // namespace dicke

#endif
