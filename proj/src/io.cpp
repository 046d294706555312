#include "dicke/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "dicke/hamiltonian.hpp"

namespace dicke {

namespace {

const char* kTargetFormat = "dicke-pulse/target/v1";
const char* kScheduleFormat = "dicke-pulse/schedule/v1";

struct Field {
  int line;
  std::string key;
  std::string value;
};

[[noreturn]] void fail(const std::string& what, int line, const std::string& msg) {
  throw std::invalid_argument(what + " line " + std::to_string(line) + ": " + msg);
}

// `key = value` lines in order; '#' starts a comment, blank lines skipped.
std::vector<Field> read_fields(std::istream& in, const std::string& what) {
  std::vector<Field> fields;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail(what, number, "expected 'key = value'");
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    Field field{number, trim(line.substr(0, eq)), trim(line.substr(eq + 1))};
    if (field.key.empty()) fail(what, number, "empty key");
    fields.push_back(std::move(field));
  }
  return fields;
}

class FieldCursor {
 public:
  FieldCursor(std::vector<Field> fields, std::string what)
      : fields_(std::move(fields)), what_(std::move(what)) {}

  const Field& expect(const std::string& key) {
    if (next_ >= fields_.size()) {
      throw std::invalid_argument(what_ + ": missing field '" + key + "'");
    }
    const Field& field = fields_[next_];
    if (field.key != key) {
      fail(what_, field.line, "expected field '" + key + "', got '" + field.key + "'");
    }
    ++next_;
    return field;
  }

  void expect_end() const {
    if (next_ < fields_.size()) {
      fail(what_, fields_[next_].line,
           "unexpected field '" + fields_[next_].key + "'");
    }
  }

  const std::string& what() const { return what_; }

 private:
  std::vector<Field> fields_;
  std::string what_;
  std::size_t next_ = 0;
};

std::vector<std::string> split_tokens(const std::string& value) {
  std::vector<std::string> tokens;
  std::istringstream stream(value);
  std::string token;
  while (stream >> token) tokens.push_back(token);
  return tokens;
}

double parse_double(const std::string& what, const Field& field,
                    const std::string& token) {
  const char* begin = token.c_str();
  char* end = nullptr;
  const double value = std::strtod(begin, &end);
  if (end != begin + token.size() || !std::isfinite(value)) {
    fail(what, field.line, "field '" + field.key + "': bad number '" + token + "'");
  }
  return value;
}

int parse_int(const std::string& what, const Field& field, const std::string& token) {
  const char* begin = token.c_str();
  char* end = nullptr;
  const long value = std::strtol(begin, &end, 10);
  if (end != begin + token.size() || value < -1000000 || value > 1000000) {
    fail(what, field.line, "field '" + field.key + "': bad integer '" + token + "'");
  }
  return static_cast<int>(value);
}

double parse_scalar(const std::string& what, const Field& field) {
  const auto tokens = split_tokens(field.value);
  if (tokens.size() != 1) {
    fail(what, field.line, "field '" + field.key + "': expected one value");
  }
  return parse_double(what, field, tokens[0]);
}

std::ifstream open_or_fail(const std::string& path, const std::string& what) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument(what + ": cannot open '" + path + "'");
  }
  return in;
}

}  // namespace

std::string format_number(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

TargetFile read_target_file(std::istream& in) {
  const std::string what = "target file";
  FieldCursor cursor(read_fields(in, what), what);

  const Field& format = cursor.expect("format");
  if (format.value != kTargetFormat) {
    fail(what, format.line, "field 'format': expected '" + std::string(kTargetFormat) +
                                "', got '" + format.value + "'");
  }
  const Field& dots = cursor.expect("n_dots");
  TargetFile file;
  file.n_dots = parse_int(what, dots, dots.value);
  if (file.n_dots < 1) fail(what, dots.line, "field 'n_dots': must be >= 1");

  file.coefficients.resize(file.n_dots + 1);
  for (int k = 0; k <= file.n_dots; ++k) {
    const Field& coeff = cursor.expect("coeff");
    const auto tokens = split_tokens(coeff.value);
    if (tokens.size() != 2) {
      fail(what, coeff.line, "field 'coeff': expected '<re> <im>'");
    }
    file.coefficients(k) = Complex(parse_double(what, coeff, tokens[0]),
                                   parse_double(what, coeff, tokens[1]));
  }
  cursor.expect_end();
  file.norm_deviation = std::abs(file.coefficients.norm() - 1.0);
  return file;
}

TargetFile read_target_file(const std::string& path) {
  std::ifstream in = open_or_fail(path, "target file");
  return read_target_file(in);
}

void write_target_file(std::ostream& out, const DickeState& state) {
  out << "# dicke-pulse target: coefficients over |J,M>, M = -J..J\n";
  out << "format = " << kTargetFormat << "\n";
  out << "n_dots = " << state.n_dots() << "\n";
  for (int k = 0; k < state.dim(); ++k) {
    out << "coeff = " << format_number(state.amplitude(k).real()) << " "
        << format_number(state.amplitude(k).imag()) << "\n";
  }
}

DickeState to_state(const TargetFile& file) {
  return DickeState(file.n_dots, file.coefficients);
}

ScheduleFile read_schedule_file(std::istream& in) {
  const std::string what = "schedule file";
  FieldCursor cursor(read_fields(in, what), what);

  const Field& format = cursor.expect("format");
  if (format.value != kScheduleFormat) {
    fail(what, format.line, "field 'format': expected '" +
                                std::string(kScheduleFormat) + "', got '" +
                                format.value + "'");
  }
  ScheduleFile file;
  const Field& dots = cursor.expect("n_dots");
  file.n_dots = parse_int(what, dots, dots.value);
  if (file.n_dots < 1) fail(what, dots.line, "field 'n_dots': must be >= 1");
  const Field& ratio = cursor.expect("w_over_g");
  file.w_over_g = parse_scalar(what, ratio);
  if (file.w_over_g <= 0.0) fail(what, ratio.line, "field 'w_over_g': must be > 0");
  const Field& removed = cursor.expect("removed_global_phase");
  file.removed_global_phase = parse_scalar(what, removed);

  const Field& count_field = cursor.expect("pulse_count");
  const int count = parse_int(what, count_field, count_field.value);
  if (count < 0 || count > file.n_dots) {
    fail(what, count_field.line, "field 'pulse_count': must be in 0.." +
                                     std::to_string(file.n_dots));
  }
  for (int p = 0; p < count; ++p) {
    const Field& field = cursor.expect("pulse");
    const auto tokens = split_tokens(field.value);
    if (tokens.size() != 5) {
      fail(what, field.line,
           "field 'pulse': expected '<step_index> <detuning_over_g> "
           "<omega_tau> <phase> <duration_g>'");
    }
    SchedulePulse pulse;
    pulse.step_index = parse_int(what, field, tokens[0]);
    pulse.detuning_over_g = parse_double(what, field, tokens[1]);
    pulse.omega_tau = parse_double(what, field, tokens[2]);
    pulse.phase = parse_double(what, field, tokens[3]);
    pulse.duration_g = parse_double(what, field, tokens[4]);
    if (pulse.step_index < 0 || pulse.step_index >= file.n_dots) {
      fail(what, field.line, "field 'pulse': step_index out of range 0.." +
                                 std::to_string(file.n_dots - 1));
    }
    const double expected =
        resonant_detuning(file.n_dots, pulse.step_index, file.w_over_g);
    if (std::abs(pulse.detuning_over_g - expected) >
        1e-9 * std::max(1.0, std::abs(expected))) {
      fail(what, field.line,
           "field 'pulse': detuning_over_g " + format_number(pulse.detuning_over_g) +
               " inconsistent with step_index " + std::to_string(pulse.step_index) +
               " (resonance requires " + format_number(expected) + ")");
    }
    const double angle =
        effective_rabi(file.n_dots, pulse.step_index, 1.0) * pulse.duration_g;
    if (std::abs(pulse.omega_tau - angle) > 1e-9) {
      fail(what, field.line,
           "field 'pulse': omega_tau " + format_number(pulse.omega_tau) +
               " inconsistent with duration_g (expected " + format_number(angle) + ")");
    }
    file.pulses.push_back(pulse);
  }
  cursor.expect_end();
  return file;
}

ScheduleFile read_schedule_file(const std::string& path) {
  std::ifstream in = open_or_fail(path, "schedule file");
  return read_schedule_file(in);
}

void write_schedule_file(std::ostream& out, const ScheduleFile& schedule) {
  out << "# dicke-pulse schedule: energies in units of g, durations as g*tau\n";
  out << "format = " << kScheduleFormat << "\n";
  out << "n_dots = " << schedule.n_dots << "\n";
  out << "w_over_g = " << format_number(schedule.w_over_g) << "\n";
  out << "removed_global_phase = " << format_number(schedule.removed_global_phase)
      << "\n";
  out << "pulse_count = " << schedule.pulses.size() << "\n";
  if (!schedule.pulses.empty()) {
    out << "# pulse = step_index detuning_over_g omega_tau phase duration_g\n";
  }
  for (const SchedulePulse& pulse : schedule.pulses) {
    out << "pulse = " << pulse.step_index << " "
        << format_number(pulse.detuning_over_g) << " "
        << format_number(pulse.omega_tau) << " " << format_number(pulse.phase) << " "
        << format_number(pulse.duration_g) << "\n";
  }
}

ScheduleFile make_schedule(const SynthesisResult& result) {
  const SystemParams& params = result.sequence.params();
  ScheduleFile file;
  file.n_dots = params.n_dots;
  file.w_over_g = params.w_coupling / params.g_amplitude;
  file.removed_global_phase = result.removed_global_phase;
  for (const PulseSpec& pulse : result.sequence.pulses()) {
    SchedulePulse entry;
    entry.step_index = pulse.step_index;
    entry.detuning_over_g =
        resonant_detuning(params.n_dots, pulse.step_index, params.w_coupling) /
        params.g_amplitude;
    entry.omega_tau =
        effective_rabi(params.n_dots, pulse.step_index, pulse.amplitude) *
        pulse.duration;
    entry.phase = pulse.phase;
    entry.duration_g = params.g_amplitude * pulse.duration;
    file.pulses.push_back(entry);
  }
  return file;
}

PulseSequence to_sequence(const ScheduleFile& schedule) {
  const SystemParams params(schedule.n_dots, schedule.w_over_g, 1.0);
  std::vector<PulseSpec> pulses;
  pulses.reserve(schedule.pulses.size());
  for (const SchedulePulse& pulse : schedule.pulses) {
    pulses.emplace_back(pulse.step_index, pulse.duration_g, pulse.phase, 1.0);
  }
  return PulseSequence(params, std::move(pulses));
}

}  // namespace dicke
