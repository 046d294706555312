#include "dicke/hamiltonian.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "dicke/dicke_core.hpp"

namespace dicke {

namespace {

void check_step_index(const char* who, int n_dots, int step_index) {
  if (step_index < 0 || step_index > n_dots - 1) {
    throw std::invalid_argument(std::string(who) + ": step_index " +
                                std::to_string(step_index) +
                                " out of range 0.." + std::to_string(n_dots - 1));
  }
}

}  // namespace

double resonant_detuning(int n_dots, int step_index, double w_coupling) {
  check_step_index("resonant_detuning", n_dots, step_index);
  const double j = 0.5 * n_dots;
  return -w_coupling * (2.0 * j - 2.0 * step_index - 1.0);
}

Eigen::MatrixXcd build_generic_hamiltonian(const SystemParams& params,
                                           double detuning, double phase) {
  const int dim = params.n_dots + 1;
  const double j = params.j();
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
  for (int k = 0; k < dim; ++k) {
    const double m = -j + k;
    h(k, k) = detuning * m - params.w_coupling * m * m;
  }
  const Complex coupling =
      params.g_amplitude * std::exp(Complex(0.0, phase));
  for (int k = 0; k + 1 < dim; ++k) {
    const double c = ladder_coeff(params.n_dots, -j + k, Ladder::Raise);
    h(k + 1, k) = coupling * c;
    h(k, k + 1) = std::conj(coupling) * c;
  }
  return h;
}

Eigen::MatrixXcd build_pulse_hamiltonian(const SystemParams& params,
                                         const PulseSpec& pulse) {
  check_step_index("build_pulse_hamiltonian", params.n_dots, pulse.step_index);
  const int dim = params.n_dots + 1;
  const double j = params.j();
  const int i = pulse.step_index;
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
  // Diagonal -W(k-i)(k-i-1); vanishes at the two resonant levels k = i, i+1.
  for (int k = 0; k < dim; ++k) {
    h(k, k) = -params.w_coupling * (k - i) * (k - i - 1.0);
  }
  const Complex coupling = pulse.amplitude * std::exp(Complex(0.0, pulse.phase));
  for (int k = 0; k + 1 < dim; ++k) {
    const double c = ladder_coeff(params.n_dots, -j + k, Ladder::Raise);
    h(k + 1, k) = coupling * c;
    h(k, k + 1) = std::conj(coupling) * c;
  }
  return h;
}

double effective_rabi(int n_dots, int step_index, double g_amplitude) {
  check_step_index("effective_rabi", n_dots, step_index);
  const double j = 0.5 * n_dots;
  return g_amplitude *
         std::sqrt(j * (j + 1.0) - (j - step_index) * (j - step_index - 1.0));
}

Eigen::MatrixXcd build_effective_hamiltonian(const SystemParams& params,
                                             const PulseSpec& pulse) {
  check_step_index("build_effective_hamiltonian", params.n_dots, pulse.step_index);
  const int dim = params.n_dots + 1;
  const int i = pulse.step_index;
  const double rabi = effective_rabi(params.n_dots, i, pulse.amplitude);
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
  h(i + 1, i) = rabi * std::exp(Complex(0.0, pulse.phase));
  h(i, i + 1) = std::conj(h(i + 1, i));
  return h;
}

}  // namespace dicke
