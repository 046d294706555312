#include "dicke/synthesis.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "dicke/dicke_core.hpp"
#include "dicke/hamiltonian.hpp"

namespace dicke {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Level fractions within 1e-12 of exhausting the remaining norm are
// treated as exhausting it: the dropped tail costs at most ~2e-12 in
// fidelity, far inside the 1e-10 contract, and the pulse count stays
// exact for targets whose support ends mid-ladder.
constexpr double kFullConsumption = 1.0 - 1e-12;

// Tail norms below this carry < 1e-17 of population.
constexpr double kNegligibleTail = 1e-9;

}  // namespace

double remaining_norm(const DickeState& target, int step) {
  if (step < 0 || step > target.n_dots() + 1) {
    throw std::invalid_argument("remaining_norm: step " + std::to_string(step) +
                                " out of range 0.." +
                                std::to_string(target.n_dots() + 1));
  }
  double consumed = 0.0;
  for (int l = 0; l < step; ++l) consumed += std::norm(target.amplitude(l));
  return std::sqrt(std::max(0.0, 1.0 - consumed));
}

SynthesisResult synthesize(const DickeState& target, const SystemParams& params) {
  if (target.n_dots() != params.n_dots) {
    throw std::invalid_argument(
        "synthesize: target and params disagree on n_dots (" +
        std::to_string(target.n_dots()) + " vs " + std::to_string(params.n_dots) + ")");
  }
  if (params.w_coupling <= 0.0 || params.g_amplitude <= 0.0) {
    throw std::invalid_argument("synthesize: requires W > 0 and g > 0");
  }

  const double removed_phase = wrap_phase(global_phase_of(target));
  const DickeState canon = canonicalize_global_phase(target);
  const int n = params.n_dots;
  const double g = params.g_amplitude;

  // Forward recursion. After pulses 0..m-1 the state is
  //   sum_{l<m} C_l e_l + pref * r * e_m,
  // with r the remaining norm and pref the accumulated unit prefactor
  // (-i e^{i phi_{m-1}}) ... (-i e^{i phi_0}). Pulse m leaves |C_m| behind
  // on level m via cos(Omega_m tau_m) = |C_m| / r, and phi_m is chosen so
  // the prefactor handed to level m+1 carries arg(C_{m+1}).
  Complex prefactor(1.0, 0.0);
  double remaining = 1.0;
  std::vector<PulseSpec> pulses;
  for (int m = 0; m < n; ++m) {
    if (remaining <= 0.0) break;
    const double fraction =
        std::min(1.0, std::abs(canon.amplitude(m)) / remaining);
    if (fraction >= kFullConsumption) break;
    const double angle = std::acos(fraction);
    const double next_remaining = remaining * std::sin(angle);

    double phase = 0.0;
    if (std::abs(canon.amplitude(m + 1)) > 0.0 && next_remaining > 0.0) {
      phase = wrap_phase(std::arg(canon.amplitude(m + 1)) - std::arg(prefactor) +
                         kPi / 2.0);
    }
    prefactor *= Complex(0.0, -1.0) * std::exp(Complex(0.0, phase));
    remaining = next_remaining;

    const double rabi = effective_rabi(n, m, g);
    pulses.emplace_back(m, angle / rabi, phase, g);

    if (remaining <= kNegligibleTail) break;
  }

  return SynthesisResult{PulseSequence(params, std::move(pulses)), removed_phase};
}

DickeState target_w(int n_dots) {
  if (n_dots < 1) throw std::invalid_argument("target_w: n_dots must be positive");
  return DickeState::basis(n_dots, 1);
}

DickeState target_ghz_profile(int n_dots) {
  if (n_dots < 2)
    throw std::invalid_argument("target_ghz_profile: requires n_dots >= 2");
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(n_dots + 1);
  amps(0) = amps(n_dots) = 1.0 / std::sqrt(2.0);
  return DickeState(n_dots, std::move(amps));
}

DickeState target_uniform(int n_dots) {
  if (n_dots < 1) throw std::invalid_argument("target_uniform: n_dots must be positive");
  Eigen::VectorXcd amps =
      Eigen::VectorXcd::Constant(n_dots + 1, 1.0 / std::sqrt(n_dots + 1.0));
  return DickeState(n_dots, std::move(amps));
}

}  // namespace dicke
