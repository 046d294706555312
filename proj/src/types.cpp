#include "dicke/types.hpp"

#include <cmath>

#include "dicke/hamiltonian.hpp"

namespace dicke {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kNormRejectTol = 1e-6;

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

double wrap_phase(double phase) {
  double w = std::fmod(phase, 2.0 * kPi);
  if (w < 0.0) w += 2.0 * kPi;
  if (w >= 2.0 * kPi) w = 0.0;  // fmod roundoff at the seam
  return w;
}

DickeState::DickeState(int n_dots, Eigen::VectorXcd amplitudes)
    : n_dots_(n_dots), amps_(std::move(amplitudes)) {
  require(n_dots_ >= 1, "DickeState: n_dots must be positive");
  require(amps_.size() == n_dots_ + 1,
          "DickeState: amplitude vector must have length n_dots + 1, got " +
              std::to_string(amps_.size()));
  const double norm = amps_.norm();
  require(std::isfinite(norm) && std::abs(norm - 1.0) <= kNormRejectTol,
          "DickeState: amplitudes not normalized (|norm - 1| = " +
              std::to_string(std::abs(norm - 1.0)) + " exceeds 1e-6)");
  amps_ /= norm;
}

DickeState DickeState::ground(int n_dots) { return basis(n_dots, 0); }

DickeState DickeState::basis(int n_dots, int k) {
  require(n_dots >= 1, "DickeState: n_dots must be positive");
  require(k >= 0 && k <= n_dots, "DickeState: basis index out of range");
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(n_dots + 1);
  amps(k) = 1.0;
  return DickeState(n_dots, std::move(amps));
}

SystemParams::SystemParams(int n_dots_in, double w_coupling_in, double g_amplitude_in)
    : n_dots(n_dots_in), w_coupling(w_coupling_in), g_amplitude(g_amplitude_in) {
  require(n_dots >= 1, "SystemParams: n_dots must be positive");
  require(std::isfinite(w_coupling) && w_coupling >= 0.0,
          "SystemParams: w_coupling must be a finite nonnegative energy");
  require(std::isfinite(g_amplitude) && g_amplitude >= 0.0,
          "SystemParams: g_amplitude must be a finite nonnegative energy");
}

PulseSpec::PulseSpec(int step_index_in, double duration_in, double phase_in,
                     double amplitude_in)
    : step_index(step_index_in),
      duration(duration_in),
      phase(wrap_phase(phase_in)),
      amplitude(amplitude_in) {
  require(step_index >= 0, "PulseSpec: step_index must be nonnegative");
  require(std::isfinite(duration) && duration >= 0.0,
          "PulseSpec: duration must be finite and nonnegative");
  require(std::isfinite(phase_in), "PulseSpec: phase must be finite");
  require(std::isfinite(amplitude) && amplitude >= 0.0,
          "PulseSpec: amplitude must be finite and nonnegative");
}

PulseSequence::PulseSequence(SystemParams params, std::vector<PulseSpec> pulses)
    : params_(params), pulses_(std::move(pulses)) {
  int previous = -1;
  for (const PulseSpec& pulse : pulses_) {
    require(pulse.step_index <= params_.n_dots - 1,
            "PulseSequence: step_index " + std::to_string(pulse.step_index) +
                " out of range for n_dots = " + std::to_string(params_.n_dots));
    require(pulse.step_index > previous,
            "PulseSequence: step indices must strictly increase");
    previous = pulse.step_index;
    const double angle =
        effective_rabi(params_.n_dots, pulse.step_index, pulse.amplitude) *
        pulse.duration;
    require(angle <= kPi / 2.0 + 1e-9,
            "PulseSequence: rotation angle " + std::to_string(angle) +
                " outside the principal branch [0, pi/2]");
  }
}

double PulseSequence::total_duration() const {
  double total = 0.0;
  for (const PulseSpec& pulse : pulses_) total += pulse.duration;
  return total;
}

}  // namespace dicke
