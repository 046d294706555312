#ifndef DICKE_DICKE_CORE_HPP
#define DICKE_DICKE_CORE_HPP

#include <Eigen/Dense>

#include "dicke/types.hpp"

namespace dicke {

enum class Ladder { Raise, Lower };

/// Collective angular-momentum matrices in the (N+1)-dimensional Dicke
/// basis, ordered |J,-J> ... |J,+J>.
struct CollectiveOps {
  Eigen::MatrixXcd jz;
  Eigen::MatrixXcd jplus;
  Eigen::MatrixXcd jminus;
};

/// Ladder matrix element sqrt(J(J+1) - m(m+1)) (raise) or
/// sqrt(J(J+1) - m(m-1)) (lower), J = N/2. m must lie on the half-integer
/// grid -J..J; raising from m = J and lowering from m = -J return 0.
double ladder_coeff(int n_dots, double m, Ladder direction);

/// Jz diagonal with entries -J..J, Jplus with the ladder coefficients on
/// its first subdiagonal, Jminus the conjugate transpose of Jplus.
CollectiveOps build_collective_matrices(int n_dots);

/// |<a|b>|^2, invariant under global phases of either argument.
double fidelity(const DickeState& a, const DickeState& b);

/// Phase of the first amplitude with modulus > 1e-12.
double global_phase_of(const DickeState& s);

/// Multiplies the state by one unit-modulus factor so the first
/// significant amplitude becomes real and positive.
DickeState canonicalize_global_phase(const DickeState& s);

}  // namespace dicke

#endif
