#include "dicke/propagation.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "dicke/dicke_core.hpp"
#include "dicke/hamiltonian.hpp"
#include "dicke/synthesis.hpp"

namespace dicke {

namespace {

// exp(-i H tau) psi for Hermitian H via spectral decomposition.
Eigen::VectorXcd propagate_exact(const Eigen::MatrixXcd& h, double tau,
                                 const Eigen::VectorXcd& psi) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("propagate_exact: eigendecomposition failed");
  }
  const Eigen::VectorXcd phases =
      (Complex(0.0, -tau) * solver.eigenvalues().array()).exp();
  return solver.eigenvectors() *
         (phases.array() * (solver.eigenvectors().adjoint() * psi).array())
             .matrix();
}

double population_outside_pair(const Eigen::VectorXcd& amps, int i) {
  double outside = 0.0;
  for (int k = 0; k < amps.size(); ++k) {
    if (k != i && k != i + 1) outside += std::norm(amps(k));
  }
  return outside;
}

}  // namespace

DickeState evolve_effective(const DickeState& state, const PulseSpec& pulse,
                            const SystemParams& params) {
  if (state.n_dots() != params.n_dots) {
    throw std::invalid_argument("evolve_effective: state/params dot count mismatch");
  }
  const int i = pulse.step_index;
  const double angle =
      effective_rabi(params.n_dots, i, pulse.amplitude) * pulse.duration;
  const double c = std::cos(angle);
  const Complex s_lower = Complex(0.0, -1.0) * std::exp(Complex(0.0, -pulse.phase)) *
                          std::sin(angle);
  const Complex s_raise = Complex(0.0, -1.0) * std::exp(Complex(0.0, pulse.phase)) *
                          std::sin(angle);
  Eigen::VectorXcd amps = state.amplitudes();
  const Complex a = amps(i);
  const Complex b = amps(i + 1);
  amps(i) = c * a + s_lower * b;
  amps(i + 1) = s_raise * a + c * b;
  return DickeState(state.n_dots(), std::move(amps));
}

DickeState evolve_full(const DickeState& state, const PulseSpec& pulse,
                       const SystemParams& params) {
  if (state.n_dots() != params.n_dots) {
    throw std::invalid_argument("evolve_full: state/params dot count mismatch");
  }
  const Eigen::MatrixXcd h = build_pulse_hamiltonian(params, pulse);
  Eigen::VectorXcd amps = propagate_exact(h, pulse.duration, state.amplitudes());
  // Undo the static diagonal: amplitudes are kept in the pulse's
  // interaction frame (see header).
  for (int k = 0; k < amps.size(); ++k) {
    amps(k) *= std::exp(Complex(0.0, pulse.duration * h(k, k).real()));
  }
  return DickeState(state.n_dots(), std::move(amps));
}

SimulationRecord run_sequence(const DickeState& initial, const PulseSequence& seq,
                              PropagationMode mode,
                              const std::optional<DickeState>& target) {
  if (initial.n_dots() != seq.params().n_dots) {
    throw std::invalid_argument("run_sequence: initial state dot count mismatch");
  }
  if (target && target->n_dots() != initial.n_dots()) {
    throw std::invalid_argument("run_sequence: target dot count mismatch");
  }

  SimulationRecord record{mode, {}, initial, std::nullopt, {}};
  record.snapshots.emplace_back(0, initial);
  DickeState state = initial;
  int ordinal = 0;
  for (const PulseSpec& pulse : seq.pulses()) {
    const double before =
        population_outside_pair(state.amplitudes(), pulse.step_index);
    state = mode == PropagationMode::Effective
                ? evolve_effective(state, pulse, seq.params())
                : evolve_full(state, pulse, seq.params());
    record.snapshots.emplace_back(++ordinal, state);
    if (mode == PropagationMode::Full) {
      const double after =
          population_outside_pair(state.amplitudes(), pulse.step_index);
      record.leakage_per_pulse.push_back(
          std::min(1.0, std::max(0.0, after - before)));
    }
  }
  record.final_state = state;
  if (target) record.target_fidelity = fidelity(state, *target);
  return record;
}

std::vector<RwaSweepPoint> rwa_sweep(const DickeState& target,
                                     const SystemParams& params_base,
                                     const std::vector<double>& ratios) {
  double previous = 0.0;
  for (double ratio : ratios) {
    if (!(ratio > 0.0) || ratio <= previous) {
      throw std::invalid_argument("rwa_sweep: ratios must be positive and ascending");
    }
    previous = ratio;
  }
  std::vector<RwaSweepPoint> points;
  points.reserve(ratios.size());
  for (double ratio : ratios) {
    const SystemParams params(params_base.n_dots,
                              ratio * params_base.g_amplitude,
                              params_base.g_amplitude);
    const SynthesisResult synth = synthesize(target, params);
    const SimulationRecord record =
        run_sequence(DickeState::ground(params.n_dots), synth.sequence,
                     PropagationMode::Full, canonicalize_global_phase(target));
    points.push_back(RwaSweepPoint{ratio, *record.target_fidelity,
                                   synth.sequence.total_duration()});
  }
  return points;
}

}  // namespace dicke
