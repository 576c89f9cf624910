#include "telwit/cutting_plane.hpp"

#include <utility>

namespace telwit {

void SolveParams::validate() const {
  if (!(outer_tol > 0.0)) throw Error("outer tolerance must be positive");
  if (max_outer < 1) throw Error("max outer iterations must be positive");
  if (!(tau > 0.0)) throw Error("usefulness threshold must be positive");
  oracle.validate();
  projection.validate();
}

SolveReport solve(const DensityMatrix& rho, const SolveParams& params) {
  params.validate();
  if (rho.dim_a() != rho.dim_b() || rho.dim_a() < 2) {
    throw Error("solve: input must be a d x d bipartite state with d >= 2");
  }
  const int d = rho.dim_a();
  const double threshold = 1.0 / d + params.outer_tol;

  ConstraintSet active = ConstraintSet::identity_only(d);
  DykstraWarmStart warm;
  DykstraWarmStart* warm_ptr = params.warm_start ? &warm : nullptr;
  std::vector<IterationRecord> log;

  for (int k = 0;; ++k) {
    ProjectionResult proj = dykstra_project(rho, active, params.projection, warm_ptr);
    const MefEstimate mef = estimate_mef(proj.sigma, params.oracle, derive_seed(params.seed, k));
    const double distance = (rho.matrix() - proj.sigma.matrix()).norm();
    log.push_back({k, mef.f_est, distance});

    const bool feasible = mef.f_est <= threshold;
    // A cut that duplicates an existing one cannot move the projection
    // further; the relaxation is then as tight as this oracle can make it.
    const bool stalled = !feasible && !active.add(mef.u_opt);
    if (feasible || stalled || k + 1 >= params.max_outer) {
      const bool converged = feasible && proj.converged;
      return {std::move(proj.sigma), distance, distance > params.tau, std::move(active),
              k + 1, std::move(log), converged, mef.f_est};
    }
  }
}

std::vector<CurvePoint> distance_curve(FamilyKind family, std::span<const double> p_grid,
                                       const SolveParams& params) {
  std::vector<CurvePoint> out;
  out.reserve(p_grid.size());
  for (std::size_t i = 0; i < p_grid.size(); ++i) {
    const double p = p_grid[i];
    CurvePoint point{p, 0.0, 0.0, false, false, 0, std::nullopt};
    try {
      const DensityMatrix rho = make_state({family, p});
      SolveParams local = params;
      local.seed = derive_seed(params.seed, i);
      const SolveReport report = solve(rho, local);
      point.distance = report.distance;
      point.useful = report.useful;
      point.converged = report.converged;
      point.outer_iterations = report.outer_iterations;
      point.f_est_at_rho = estimate_mef(rho, params.oracle, local.seed).f_est;
    } catch (const Error& e) {
      point.error = e.what();
    }
    out.push_back(std::move(point));
  }
  return out;
}

}  // namespace telwit
