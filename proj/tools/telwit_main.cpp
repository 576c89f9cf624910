// telwit: teleportation usefulness of two-qudit states via the distance to
// the set of useless states, and the matching optimal witness.

#include <iostream>

#include "CLI11.hpp"
#include "cli/commands.hpp"

namespace {

void add_solver_flags(CLI::App* cmd, telwit::cli::SolverFlags& f, bool oracle_only = false) {
  if (!oracle_only) {
    cmd->add_option("--eps", f.eps, "outer tolerance")->capture_default_str()->check(CLI::PositiveNumber);
    cmd->add_option("--kmax", f.kmax, "maximum outer iterations")->capture_default_str()->check(CLI::PositiveNumber);
    cmd->add_option("--tau", f.tau, "usefulness threshold on the distance")->capture_default_str()->check(CLI::PositiveNumber);
  }
  cmd->add_option("--delta", f.delta, "inner (fixed-point) tolerance")->capture_default_str()->check(CLI::PositiveNumber);
  cmd->add_option("--tmax", f.tmax, "maximum inner iterations")->capture_default_str()->check(CLI::PositiveNumber);
  cmd->add_option("--restarts", f.restarts, "Haar-random restarts")->capture_default_str()->check(CLI::PositiveNumber);
  cmd->add_option("--seed", f.seed, "random seed")->capture_default_str();
}

void add_state_source(CLI::App* cmd, telwit::cli::StateSource& src) {
  cmd->add_option("--state", src.state_file, "JSON state file")->check(CLI::ExistingFile);
  cmd->add_option("--family", src.family, "werner | mems | qutrit_nme");
  cmd->add_option("--p", src.p, "visibility in [0, 1]");
}

}  // namespace

int main(int argc, char** argv) {
  using namespace telwit::cli;

  CLI::App app{"telwit - teleportation usefulness and optimal witnesses for two-qudit states"};
  app.require_subcommand(1);

  ScanOptions scan;
  auto* scan_cmd = app.add_subcommand("scan", "distance sweep over a state family");
  scan_cmd->add_option("--family", scan.family, "werner | mems | qutrit_nme")->required();
  scan_cmd->add_option("--p-min", scan.p_min)->capture_default_str();
  scan_cmd->add_option("--p-max", scan.p_max)->capture_default_str();
  scan_cmd->add_option("--p-step", scan.p_step)->capture_default_str();
  scan_cmd->add_option("--out", scan.out_path, "output file (default: stdout)");
  scan_cmd->add_option("--format", scan.format, "csv | json")->capture_default_str();
  add_solver_flags(scan_cmd, scan.solver);

  std::filesystem::path check_file;
  SolverFlags check_flags;
  auto* check_cmd = app.add_subcommand("check", "decide usefulness of a state file");
  check_cmd->add_option("state_file", check_file, "JSON state file")->required();
  add_solver_flags(check_cmd, check_flags);

  WitnessOptions witness;
  auto* witness_cmd = app.add_subcommand("witness", "extract the optimal teleportation witness");
  add_state_source(witness_cmd, witness.source);
  witness_cmd->add_option("--out", witness.out_path, "JSON output file");
  add_solver_flags(witness_cmd, witness.solver);

  StateSource mef_source;
  SolverFlags mef_flags;
  auto* mef_cmd = app.add_subcommand("mef", "estimate the maximal entangled fraction");
  add_state_source(mef_cmd, mef_source);
  add_solver_flags(mef_cmd, mef_flags, true);

  StateSource cc_source;
  SolverFlags cc_flags;
  auto* cc_cmd = app.add_subcommand("crosscheck", "two-qubit correlation-matrix cross-check");
  add_state_source(cc_cmd, cc_source);
  add_solver_flags(cc_cmd, cc_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (*scan_cmd) return cmd_scan(scan, std::cout, std::cerr);
  if (*check_cmd) return cmd_check(check_file, check_flags, std::cout, std::cerr);
  if (*witness_cmd) return cmd_witness(witness, std::cout, std::cerr);
  if (*mef_cmd) return cmd_mef(mef_source, mef_flags, std::cout, std::cerr);
  if (*cc_cmd) return cmd_crosscheck(cc_source, cc_flags, std::cout, std::cerr);
  return kExitUsage;
}
