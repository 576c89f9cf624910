// Two-layer cutting-plane solver for the distance from ρ to the set S of
// states with F_max ≤ 1/d.
//
// Outer layer: project ρ onto the relaxation defined by the active set.
// Inner layer: estimate F_max at the projection; a violating unitary becomes
// a new cut. Stops when F_max^est ≤ 1/d + ε or after max_outer rounds.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "telwit/mef_oracle.hpp"
#include "telwit/projection.hpp"
#include "telwit/states.hpp"

namespace telwit {

struct SolveParams {
  double outer_tol = 1e-8;  // ε
  OracleParams oracle;
  ProjectionParams projection;
  int max_outer = 1000;     // K_max
  double tau = 1e-6;        // usefulness threshold on D
  std::uint64_t seed = 0;
  bool warm_start = true;   // reuse Dykstra corrections between outer rounds

  void validate() const;
};

struct IterationRecord {
  int k;
  double f_est;
  double distance;
};

struct SolveReport {
  DensityMatrix sigma_star;
  double distance;
  bool useful;
  ConstraintSet active_set;
  int outer_iterations;
  std::vector<IterationRecord> log;
  bool converged;
  double final_f_est;
};

SolveReport solve(const DensityMatrix& rho, const SolveParams& params = {});

struct CurvePoint {
  double p;
  double distance;
  double f_est_at_rho;
  bool useful;
  bool converged;
  int outer_iterations;
  std::optional<std::string> error;
};

/// One solve per grid value; grid point i is solved with seed
/// derive_seed(params.seed, i). Failures are recorded per point.
std::vector<CurvePoint> distance_curve(FamilyKind family, std::span<const double> p_grid,
                                       const SolveParams& params = {});

}  // namespace telwit
