#ifndef DICKE_TYPES_HPP
#define DICKE_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace dicke {

using Complex = std::complex<double>;

/// Thrown when a request exceeds the dense-representation size caps
/// (distinct from std::invalid_argument so callers can map it to a
/// dedicated exit code).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Normalized state of N coupled two-level dots in the fully symmetric
/// (maximum-J) sector. Amplitudes are stored bottom-of-ladder first:
/// index k corresponds to the collective level with M = -J + k, J = N/2,
/// i.e. k counts excitons. Inputs whose norm deviates from 1 by more
/// than 1e-6 are rejected; smaller deviations are renormalized.
class DickeState {
 public:
  DickeState(int n_dots, Eigen::VectorXcd amplitudes);

  /// Zero-exciton state |J,-J>.
  static DickeState ground(int n_dots);
  /// Basis state |J,-J+k> (k excitons).
  static DickeState basis(int n_dots, int k);

  int n_dots() const { return n_dots_; }
  int dim() const { return n_dots_ + 1; }
  double j() const { return 0.5 * n_dots_; }
  const Eigen::VectorXcd& amplitudes() const { return amps_; }
  Complex amplitude(int k) const { return amps_(k); }

 private:
  int n_dots_;
  Eigen::VectorXcd amps_;
};

/// Static parameters of the dot array: dot count N, interdot coupling W
/// and laser amplitude g, both in energy units with hbar = 1. The
/// two-level reduction of each pulse is controlled by the ratio
/// W / (J g); synthesis requires strictly positive W and g.
struct SystemParams {
  int n_dots;
  double w_coupling;
  double g_amplitude;

  SystemParams(int n_dots, double w_coupling, double g_amplitude);

  double j() const { return 0.5 * n_dots; }
  double rwa_ratio() const { return w_coupling / (j() * g_amplitude); }
};

/// One rectangular laser pulse. step_index selects which ladder
/// transition k = i <-> i+1 is made resonant through the detuning
/// -W(2J - 2i - 1); duration is in inverse-energy units (hbar = 1);
/// the phase is stored wrapped to [0, 2*pi).
struct PulseSpec {
  int step_index;
  double duration;
  double phase;
  double amplitude;

  PulseSpec(int step_index, double duration, double phase, double amplitude);
};

/// Ordered pulse schedule produced by the compiler: step indices
/// strictly increase and every rotation angle Omega_i * tau_i lies on
/// the principal branch [0, pi/2], so a sequence never exceeds N pulses.
class PulseSequence {
 public:
  PulseSequence(SystemParams params, std::vector<PulseSpec> pulses);

  const SystemParams& params() const { return params_; }
  const std::vector<PulseSpec>& pulses() const { return pulses_; }
  std::size_t size() const { return pulses_.size(); }
  bool empty() const { return pulses_.empty(); }
  /// Sum of pulse durations (inverse-energy units).
  double total_duration() const;

 private:
  SystemParams params_;
  std::vector<PulseSpec> pulses_;
};

/// Wraps an angle into [0, 2*pi).
double wrap_phase(double phase);

}  // namespace dicke

#endif
