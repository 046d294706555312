#ifndef DICKE_IO_HPP
#define DICKE_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "dicke/synthesis.hpp"
#include "dicke/types.hpp"

namespace dicke {

// Flat text formats: '#' comment lines plus ordered `key = value` lines,
// repeated keys forming arrays. Writers emit a fixed field order and
// format every number with 17 significant digits, so identical inputs
// produce byte-identical files. All quantities are dimensionless
// (energies as multiples of g, durations as g*tau).

/// Number -> shortest fixed format used by every writer ("%.17g").
std::string format_number(double value);

struct TargetFile {
  int n_dots = 0;
  Eigen::VectorXcd coefficients;  // as read, before renormalization
  double norm_deviation = 0.0;    // | ||c|| - 1 | of the raw coefficients
};

TargetFile read_target_file(std::istream& in);
TargetFile read_target_file(const std::string& path);
void write_target_file(std::ostream& out, const DickeState& state);

/// Validated state carried by a target file (renormalizes deviations up
/// to 1e-6, rejects larger ones).
DickeState to_state(const TargetFile& file);

struct SchedulePulse {
  int step_index = 0;
  double detuning_over_g = 0.0;
  double omega_tau = 0.0;   // rotation angle Omega_i * tau_i
  double phase = 0.0;
  double duration_g = 0.0;  // g * tau
};

struct ScheduleFile {
  int n_dots = 0;
  double w_over_g = 0.0;
  double removed_global_phase = 0.0;
  std::vector<SchedulePulse> pulses;
};

/// Readers validate structure and the resonance condition linking each
/// pulse's detuning to its step index.
ScheduleFile read_schedule_file(std::istream& in);
ScheduleFile read_schedule_file(const std::string& path);
void write_schedule_file(std::ostream& out, const ScheduleFile& schedule);

/// Dimensionless schedule from a synthesis result.
ScheduleFile make_schedule(const SynthesisResult& result);

/// Executable sequence in g = 1 units (W = w_over_g, tau = duration_g).
PulseSequence to_sequence(const ScheduleFile& schedule);

}  // namespace dicke

#endif
