#include "dicke/dicke_core.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dicke {

namespace {

constexpr double kSignificantAmplitude = 1e-12;

// m must sit on the half-integer ladder -J..J: m + J integral within fp slack.
void check_on_ladder(int n_dots, double m) {
  const double j = 0.5 * n_dots;
  const double offset = m + j;
  const double nearest = std::round(offset);
  if (std::abs(offset - nearest) > 1e-9 || nearest < -0.5 ||
      nearest > n_dots + 0.5 || m < -j - 1e-9 || m > j + 1e-9) {
    throw std::invalid_argument("ladder_coeff: m = " + std::to_string(m) +
                                " is not a level of the J = N/2 ladder");
  }
}

}  // namespace

double ladder_coeff(int n_dots, double m, Ladder direction) {
  if (n_dots < 1) throw std::invalid_argument("ladder_coeff: n_dots must be positive");
  check_on_ladder(n_dots, m);
  const double j = 0.5 * n_dots;
  const double partner = direction == Ladder::Raise ? m * (m + 1.0) : m * (m - 1.0);
  return std::sqrt(std::max(0.0, j * (j + 1.0) - partner));
}

CollectiveOps build_collective_matrices(int n_dots) {
  if (n_dots < 1)
    throw std::invalid_argument("build_collective_matrices: n_dots must be positive");
  const int dim = n_dots + 1;
  const double j = 0.5 * n_dots;
  CollectiveOps ops{Eigen::MatrixXcd::Zero(dim, dim), Eigen::MatrixXcd::Zero(dim, dim),
                    Eigen::MatrixXcd::Zero(dim, dim)};
  for (int k = 0; k < dim; ++k) ops.jz(k, k) = -j + k;
  for (int k = 0; k + 1 < dim; ++k) {
    const double m = -j + k;
    ops.jplus(k + 1, k) = ladder_coeff(n_dots, m, Ladder::Raise);
  }
  ops.jminus = ops.jplus.adjoint();
  return ops;
}

double fidelity(const DickeState& a, const DickeState& b) {
  if (a.n_dots() != b.n_dots()) {
    throw std::invalid_argument("fidelity: states have different dot counts (" +
                                std::to_string(a.n_dots()) + " vs " +
                                std::to_string(b.n_dots()) + ")");
  }
  return std::norm(a.amplitudes().dot(b.amplitudes()));
}

double global_phase_of(const DickeState& s) {
  for (int k = 0; k < s.dim(); ++k) {
    if (std::abs(s.amplitude(k)) > kSignificantAmplitude)
      return std::arg(s.amplitude(k));
  }
  // unreachable for a normalized state
  throw std::invalid_argument("global_phase_of: state has no significant amplitude");
}

DickeState canonicalize_global_phase(const DickeState& s) {
  const double phase = global_phase_of(s);
  Eigen::VectorXcd amps = s.amplitudes() * std::exp(Complex(0.0, -phase));
  return DickeState(s.n_dots(), std::move(amps));
}

}  // namespace dicke
