// Maximal entangled fraction F_max(σ) = max_U Tr(σ P_U), estimated by a
// fixed-point ascent on the unitary group with Haar-random restarts.
//
// Each ascent step maximizes the linearization of Tr(σ P_U) around the
// current point: with v_U = (I⊗U)|Φ⁺⟩ and M = matricize(σ v_U), the polar
// factor of M is the unitary U' maximizing Re⟨v_U'|σ|v_U⟩. For PSD σ this
// makes F non-decreasing along the iteration.

#pragma once

#include <cstdint>
#include <vector>

#include "telwit/qmat.hpp"
#include "telwit/rng.hpp"

namespace telwit {

struct OracleParams {
  int restarts = 20;         // Haar-random starting points
  double inner_tol = 1e-8;   // stop once ‖U_new − U‖_F < inner_tol
  int max_inner = 100;

  void validate() const;
};

struct MefEstimate {
  double f_est;
  UnitaryMatrix u_opt;   // phase-normalized
  int restart_index;     // 0 is the deterministic U = I start, 1..R Haar starts
  int iterations;        // ascent steps taken by the winning restart
};

struct AscentResult {
  UnitaryMatrix u;
  double fidelity;
  int iterations;
  bool converged;
  std::vector<double> trace;  // F at the start point and after every step
};

/// Haar-random unitary via QR of a complex Ginibre matrix with the
/// diagonal phase correction U = Q·diag(R_ii/|R_ii|).
UnitaryMatrix haar_unitary(int d, Rng& rng);

/// Tr(σ P_U) for a d×d bipartite σ.
double fidelity(const DensityMatrix& sigma, const UnitaryMatrix& u);

AscentResult fixed_point_ascend(const DensityMatrix& sigma, const UnitaryMatrix& u0,
                                const OracleParams& params);

/// Runs the identity start plus `params.restarts` Haar starts (sub-seeded from
/// `seed` by restart index) and keeps the best; ties within 1e-12 go to the
/// lowest restart index.
MefEstimate estimate_mef(const DensityMatrix& sigma, const OracleParams& params, std::uint64_t seed);

/// Max of Tr(σ P_U) over `samples` Haar-random U. A lower bound on F_max
/// that shares nothing with the ascent beyond the sampler.
double brute_force_mef(const DensityMatrix& sigma, int samples, Rng& rng);

/// Optimal average teleportation fidelity (d·f + 1)/(d + 1).
double mef_to_avg_fidelity(double f, int d);

/// Multiplies U by a global phase so its largest-modulus entry is real positive.
UnitaryMatrix normalize_phase(const UnitaryMatrix& u);

}  // namespace telwit
