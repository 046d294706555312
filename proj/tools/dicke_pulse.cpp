// dicke-pulse: compile target Dicke-state superpositions of N coupled
// quantum dots into laser-pulse schedules and verify them by exact
// propagation. All file quantities are dimensionless (energies as
// multiples of g, durations as g*tau); outputs are byte-deterministic.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dicke/dicke_core.hpp"
#include "dicke/fullspace.hpp"
#include "dicke/io.hpp"
#include "dicke/propagation.hpp"
#include "dicke/synthesis.hpp"
#include "dicke/types.hpp"

namespace {

using namespace dicke;

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path);
  if (!out) throw std::invalid_argument("cannot open output file '" + output_path + "'");
  out << text;
}

DickeState load_target(const std::string& path) {
  const TargetFile file = read_target_file(path);
  if (file.norm_deviation > 1e-12) {
    std::cerr << "note: target coefficients renormalized (|norm - 1| = "
              << format_number(file.norm_deviation) << ")\n";
  }
  return to_state(file);
}

void warn_if_rwa_marginal(const SystemParams& params) {
  if (params.rwa_ratio() <= 10.0) {
    std::cerr << "warning: W/(J*g) = " << format_number(params.rwa_ratio())
              << " <= 10; the per-pulse two-level reduction assumes W >> J*g\n";
  }
}

int cmd_synth(const std::string& target_path, double w_over_g,
              const std::string& output_path) {
  const DickeState target = load_target(target_path);
  const SystemParams params(target.n_dots(), w_over_g, 1.0);
  warn_if_rwa_marginal(params);
  const SynthesisResult result = synthesize(target, params);
  std::ostringstream out;
  write_schedule_file(out, make_schedule(result));
  emit(out.str(), output_path);
  return 0;
}

PropagationMode parse_mode(const std::string& mode) {
  if (mode == "effective") return PropagationMode::Effective;
  if (mode == "full") return PropagationMode::Full;
  throw std::invalid_argument("--mode must be 'effective' or 'full', got '" + mode +
                              "'");
}

std::string trajectory_csv(const SimulationRecord& record) {
  std::ostringstream out;
  for (const auto& [ordinal, state] : record.snapshots) {
    out << ordinal;
    for (int k = 0; k < state.dim(); ++k) {
      out << "," << format_number(std::norm(state.amplitude(k)));
    }
    out << "\n";
  }
  return out.str();
}

int cmd_run(const std::string& schedule_path, const std::string& mode_name,
            const std::string& target_path, const std::string& trajectory_path,
            const std::string& output_path) {
  const ScheduleFile schedule = read_schedule_file(schedule_path);
  const PropagationMode mode = parse_mode(mode_name);
  std::optional<DickeState> target;
  if (!target_path.empty()) {
    target = load_target(target_path);
    if (target->n_dots() != schedule.n_dots) {
      throw std::invalid_argument("target has n_dots = " +
                                  std::to_string(target->n_dots()) +
                                  " but schedule has n_dots = " +
                                  std::to_string(schedule.n_dots));
    }
  }
  const PulseSequence sequence = to_sequence(schedule);
  const SimulationRecord record =
      run_sequence(DickeState::ground(schedule.n_dots), sequence, mode, target);

  std::ostringstream out;
  out << "# dicke-pulse run result\n";
  out << "format = dicke-pulse/result/v1\n";
  out << "mode = " << mode_name << "\n";
  out << "n_dots = " << schedule.n_dots << "\n";
  out << "pulse_count = " << sequence.size() << "\n";
  out << "total_duration_g = " << format_number(sequence.total_duration()) << "\n";
  for (int k = 0; k < record.final_state.dim(); ++k) {
    const Complex a = record.final_state.amplitude(k);
    out << "final_amplitude = " << format_number(a.real()) << " "
        << format_number(a.imag()) << "\n";
  }
  for (int k = 0; k < record.final_state.dim(); ++k) {
    out << "final_population = "
        << format_number(std::norm(record.final_state.amplitude(k))) << "\n";
  }
  if (record.target_fidelity) {
    out << "fidelity = " << format_number(*record.target_fidelity) << "\n";
  }
  for (double leakage : record.leakage_per_pulse) {
    out << "leakage = " << format_number(leakage) << "\n";
  }
  emit(out.str(), output_path);
  if (!trajectory_path.empty()) {
    emit(trajectory_csv(record), trajectory_path);
  }
  return 0;
}

int cmd_sweep(const std::string& target_path, const std::vector<double>& ratios,
              const std::string& output_path) {
  const DickeState target = load_target(target_path);
  const SystemParams base(target.n_dots(), 1.0, 1.0);
  const std::vector<RwaSweepPoint> points = rwa_sweep(target, base, ratios);
  std::ostringstream out;
  out << "# dicke-pulse sweep: full-mode fidelity vs coupling ratio\n";
  out << "format = dicke-pulse/sweep/v1\n";
  out << "n_dots = " << target.n_dots() << "\n";
  out << "point_count = " << points.size() << "\n";
  out << "# point = w_over_g fidelity total_duration_g\n";
  for (const RwaSweepPoint& point : points) {
    out << "point = " << format_number(point.ratio) << " "
        << format_number(point.fidelity) << " "
        << format_number(point.total_duration) << "\n";
  }
  emit(out.str(), output_path);
  return 0;
}

int cmd_verify(int n_dots, const std::string& output_path) {
  const RestrictionReport report = crosscheck_dicke_restriction(n_dots);
  const double tolerance = 1e-12;
  std::ostringstream out;
  out << "# dicke-pulse verify: product-space cross-check of the Dicke basis\n";
  out << "format = dicke-pulse/verify/v1\n";
  out << "n_dots = " << n_dots << "\n";
  out << "tolerance = " << format_number(tolerance) << "\n";
  bool all_pass = true;
  const auto check = [&](const char* name, double deviation) {
    const bool pass = deviation <= tolerance;
    all_pass = all_pass && pass;
    out << "check = " << name << " " << format_number(deviation) << " "
        << (pass ? "pass" : "fail") << "\n";
  };
  check("isometry_orthonormal", report.isometry_deviation);
  check("restriction_jz", report.jz_deviation);
  check("restriction_jplus", report.jplus_deviation);
  check("restriction_jminus", report.jminus_deviation);
  check("restriction_hamiltonian", report.hamiltonian_deviation);
  check("projector_commutes", report.projector_deviation);
  out << "verdict = " << (all_pass ? "pass" : "fail") << "\n";
  emit(out.str(), output_path);
  return all_pass ? 0 : 4;
}

int cmd_targets(int n_dots, const std::string& kind, const std::string& output_path) {
  DickeState state = [&] {
    if (kind == "w") return target_w(n_dots);
    if (kind == "ghz") return target_ghz_profile(n_dots);
    if (kind == "uniform") return target_uniform(n_dots);
    throw std::invalid_argument("--kind must be 'w', 'ghz' or 'uniform', got '" +
                                kind + "'");
  }();
  std::ostringstream out;
  write_target_file(out, state);
  emit(out.str(), output_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dicke-pulse: pulse-sequence compiler and simulator for Dicke-state "
               "superpositions of coupled quantum dots"};
  app.require_subcommand(1);

  std::string target_path, schedule_path, output_path, trajectory_path;
  std::string mode_name, kind;
  double w_over_g = 0.0;
  std::vector<double> ratios;
  int n_dots = 0;

  CLI::App* synth = app.add_subcommand(
      "synth", "Compile a target state into a pulse schedule");
  synth->add_option("--target", target_path, "target coefficient file")->required();
  synth->add_option("--w-over-g", w_over_g, "interdot coupling W as a multiple of g")
      ->required();
  synth->add_option("--output", output_path, "write the schedule here (default stdout)");

  CLI::App* run = app.add_subcommand(
      "run", "Propagate a schedule from the zero-exciton state");
  run->add_option("--schedule", schedule_path, "pulse schedule file")->required();
  run->add_option("--mode", mode_name, "propagator: effective|full")->required();
  run->add_option("--target", target_path, "report fidelity against this target");
  run->add_option("--trajectory", trajectory_path,
                  "write per-pulse populations as CSV rows");
  run->add_option("--output", output_path, "write the result here (default stdout)");

  CLI::App* sweep = app.add_subcommand(
      "sweep", "Full-mode fidelity of a target across coupling ratios");
  sweep->add_option("--target", target_path, "target coefficient file")->required();
  sweep->add_option("--ratios", ratios, "ascending W/g values (comma separated)")
      ->required()
      ->delimiter(',');
  sweep->add_option("--output", output_path, "write the table here (default stdout)");

  CLI::App* verify = app.add_subcommand(
      "verify", "Cross-check the Dicke representation in the 2^N product space");
  verify->add_option("--n", n_dots, "dot count (<= 12)")->required();
  verify->add_option("--output", output_path, "write the report here (default stdout)");

  CLI::App* targets = app.add_subcommand(
      "targets", "Print a canned target coefficient file");
  targets->add_option("--n", n_dots, "dot count")->required();
  targets->add_option("--kind", kind, "one of: w, ghz, uniform")->required();
  targets->add_option("--output", output_path, "write the target here (default stdout)");

  try {
    app.parse(argc, argv);
    if (synth->parsed()) return cmd_synth(target_path, w_over_g, output_path);
    if (run->parsed())
      return cmd_run(schedule_path, mode_name, target_path, trajectory_path,
                     output_path);
    if (sweep->parsed()) return cmd_sweep(target_path, ratios, output_path);
    if (verify->parsed()) return cmd_verify(n_dots, output_path);
    if (targets->parsed()) return cmd_targets(n_dots, kind, output_path);
    return 2;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const dicke::ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
