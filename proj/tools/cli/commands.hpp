// Subcommand handlers of the telwit tool. Each returns the process exit code
// and writes human-readable output to `out`, diagnostics to `err`.

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "telwit/telwit.hpp"

namespace telwit::cli {

enum ExitCode : int {
  kExitUseful = 0,
  kExitUsage = 1,
  kExitUnconverged = 2,
  kExitNotUseful = 3,
};

/// Solver knobs, named after the cutting-plane symbols.
struct SolverFlags {
  double eps = 1e-8;    // outer tolerance ε
  double delta = 1e-8;  // inner tolerance δ
  int kmax = 1000;      // max outer iterations
  int tmax = 100;       // max inner iterations
  int restarts = 20;    // Haar restarts R
  double tau = 1e-6;    // usefulness threshold on D
  std::uint64_t seed = 1;

  SolveParams to_params() const;
};

/// Either a named family at visibility p or a state file.
struct StateSource {
  std::optional<std::string> family;
  std::optional<double> p;
  std::optional<std::filesystem::path> state_file;

  DensityMatrix resolve() const;
};

struct ScanOptions {
  std::string family;
  double p_min = 0.0;
  double p_max = 1.0;
  double p_step = 0.05;
  SolverFlags solver;
  std::optional<std::filesystem::path> out_path;
  std::string format = "csv";
};

struct WitnessOptions {
  StateSource source;
  SolverFlags solver;
  std::optional<std::filesystem::path> out_path;
};

/// Grid p_min, p_min + step, ... ≤ p_max, snapped to 1e-12.
std::vector<double> make_grid(double p_min, double p_max, double p_step);

int cmd_scan(const ScanOptions& opts, std::ostream& out, std::ostream& err);
int cmd_check(const std::filesystem::path& state_file, const SolverFlags& solver, std::ostream& out,
              std::ostream& err);
int cmd_witness(const WitnessOptions& opts, std::ostream& out, std::ostream& err);
int cmd_mef(const StateSource& source, const SolverFlags& solver, std::ostream& out, std::ostream& err);
int cmd_crosscheck(const StateSource& source, const SolverFlags& solver, std::ostream& out, std::ostream& err);

/// JSON document written by `witness`.
std::string witness_json(const DensityMatrix& rho, const SolveReport& report);

}  // namespace telwit::cli
