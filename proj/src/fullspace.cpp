#include "dicke/fullspace.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "dicke/dicke_core.hpp"
#include "dicke/hamiltonian.hpp"

namespace dicke {

namespace {

void check_cap(const char* who, int n_dots) {
  if (n_dots < 1) {
    throw std::invalid_argument(std::string(who) + ": n_dots must be positive");
  }
  if (n_dots > kFullspaceMaxDots) {
    throw ResourceError(std::string(who) + ": n_dots = " + std::to_string(n_dots) +
                        " exceeds the dense product-space cap of " +
                        std::to_string(kFullspaceMaxDots));
  }
}

double binomial(int n, int k) {
  double result = 1.0;
  for (int i = 1; i <= k; ++i) result *= double(n - k + i) / double(i);
  return result;
}

}  // namespace

FullspaceOps build_fullspace_collective(int n_dots) {
  check_cap("build_fullspace_collective", n_dots);
  const int dim = 1 << n_dots;
  FullspaceOps ops{Eigen::MatrixXcd::Zero(dim, dim), Eigen::MatrixXcd::Zero(dim, dim),
                   Eigen::MatrixXcd::Zero(dim, dim)};
  for (int s = 0; s < dim; ++s) {
    ops.jz(s, s) = std::popcount(unsigned(s)) - 0.5 * n_dots;
    for (int p = 0; p < n_dots; ++p) {
      if ((s & (1 << p)) == 0) {
        ops.jplus(s | (1 << p), s) = 1.0;  // create the exciton in dot p
      }
    }
  }
  ops.jminus = ops.jplus.adjoint();
  return ops;
}

Eigen::MatrixXcd build_symmetric_isometry(int n_dots) {
  check_cap("build_symmetric_isometry", n_dots);
  const int dim = 1 << n_dots;
  Eigen::MatrixXcd map = Eigen::MatrixXcd::Zero(n_dots + 1, dim);
  for (int s = 0; s < dim; ++s) {
    const int k = std::popcount(unsigned(s));
    map(k, s) = 1.0 / std::sqrt(binomial(n_dots, k));
  }
  return map;
}

Eigen::MatrixXcd build_fullspace_hamiltonian(const SystemParams& params,
                                             double detuning, double phase) {
  check_cap("build_fullspace_hamiltonian", params.n_dots);
  const FullspaceOps ops = build_fullspace_collective(params.n_dots);
  const Complex coupling = params.g_amplitude * std::exp(Complex(0.0, phase));
  // J^2 - Jz^2 = (J+ J- + J- J+) / 2
  Eigen::MatrixXcd h = detuning * ops.jz + coupling * ops.jplus +
                       std::conj(coupling) * ops.jminus +
                       0.5 * params.w_coupling *
                           (ops.jplus * ops.jminus + ops.jminus * ops.jplus);
  return h;
}

double RestrictionReport::max_deviation() const {
  double worst = isometry_deviation;
  worst = std::max(worst, jz_deviation);
  worst = std::max(worst, jplus_deviation);
  worst = std::max(worst, jminus_deviation);
  worst = std::max(worst, hamiltonian_deviation);
  worst = std::max(worst, projector_deviation);
  return worst;
}

RestrictionReport crosscheck_dicke_restriction(int n_dots) {
  check_cap("crosscheck_dicke_restriction", n_dots);
  const Eigen::MatrixXcd map = build_symmetric_isometry(n_dots);
  const int dim = n_dots + 1;

  RestrictionReport report{n_dots, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0};
  report.isometry_deviation =
      (map * map.adjoint() - Eigen::MatrixXcd::Identity(dim, dim))
          .cwiseAbs()
          .maxCoeff();

  const FullspaceOps full = build_fullspace_collective(n_dots);
  const CollectiveOps dicke = build_collective_matrices(n_dots);
  report.jz_deviation =
      (map * full.jz * map.adjoint() - dicke.jz).cwiseAbs().maxCoeff();
  report.jplus_deviation =
      (map * full.jplus * map.adjoint() - dicke.jplus).cwiseAbs().maxCoeff();
  report.jminus_deviation =
      (map * full.jminus * map.adjoint() - dicke.jminus).cwiseAbs().maxCoeff();

  // Pulse Hamiltonian of every step index, fixed off-axis parameters.
  const SystemParams params(n_dots, 1.0, 0.37);
  const double j = params.j();
  for (int i = 0; i < n_dots; ++i) {
    const double detuning = resonant_detuning(n_dots, i, params.w_coupling);
    const double phase = 0.7;
    const Eigen::MatrixXcd h_full =
        build_fullspace_hamiltonian(params, detuning, phase);

    // Restriction picks up the W J(J+1) piece dropped from the Dicke build.
    const Eigen::MatrixXcd expected =
        build_generic_hamiltonian(params, detuning, phase) +
        params.w_coupling * j * (j + 1.0) *
            Eigen::MatrixXcd::Identity(dim, dim);
    report.hamiltonian_deviation =
        std::max(report.hamiltonian_deviation,
                 (map * h_full * map.adjoint() - expected).cwiseAbs().maxCoeff());

    // [H, P] with P = S^dagger S, via C = H S^dagger S and C - C^dagger.
    const Eigen::MatrixXcd c = (h_full * map.adjoint()) * map;
    report.projector_deviation = std::max(
        report.projector_deviation, (c - c.adjoint()).cwiseAbs().maxCoeff());
  }
  return report;
}

}  // namespace dicke
