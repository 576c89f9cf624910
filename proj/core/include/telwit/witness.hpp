// Teleportation witnesses built from the projection σ* of ρ onto S.
//
// W = (σ* − ρ) − c·I with c = Tr[(σ* − ρ)σ*] is the supporting hyperplane of
// S at σ*, shifted so that Tr(Wσ*) = 0. Then Tr(Wσ) = ⟨σ* − ρ, σ − σ*⟩ ≥ 0 on
// S and Tr(Wρ) = −‖ρ − σ*‖²_F.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "telwit/cutting_plane.hpp"
#include "telwit/qmat.hpp"

namespace telwit {

enum class WitnessScale { raw, unit_frobenius };

struct WitnessOperator {
  HermitianOperator w;
  double shift;
  WitnessScale scale;
};

/// Local operator basis g_0 = I, g_1.. = Pauli (d = 2, order x, y, z) or
/// Gell-Mann λ₁..λ₈ (d = 3), with Tr(g_i g_j) = 2δ_ij for i, j ≥ 1.
std::vector<ComplexMatrix> local_basis(int d);
std::array<ComplexMatrix, 3> pauli_matrices();
std::array<ComplexMatrix, 8> gell_mann_matrices();

struct BasisDecomposition {
  int d;
  RealMatrix coefficients;  // c(i, j) multiplies g_i ⊗ g_j

  std::string_view basis_name() const { return d == 2 ? "pauli" : "gellmann"; }
  ComplexMatrix reconstruct() const;
};

WitnessOperator construct_witness(const DensityMatrix& rho, const DensityMatrix& sigma_star);
WitnessOperator normalize_witness(const WitnessOperator& w);
BasisDecomposition decompose(const WitnessOperator& w, int d);
BasisDecomposition decompose(const ComplexMatrix& w, int d);
double evaluate(const WitnessOperator& w, const DensityMatrix& sigma);

/// Cosine similarity ⟨A, B⟩/(‖A‖‖B‖) of two Hermitian operators.
double cosine_similarity(const ComplexMatrix& a, const ComplexMatrix& b);

struct WitnessVerification {
  int sampled = 0;             // random states drawn
  int kept = 0;                // those certified useless by the oracle
  double min_on_useless = 0;   // min Tr(Wσ) over kept samples
  int boundary_samples = 0;    // solver outputs σ* of random states
  double min_on_boundary = 0;  // min Tr(Wσ*) over those
  std::optional<double> value_on_target;  // Tr(Wρ) when a target is supplied
  bool passed = false;         // every kept and boundary sample ≥ −1e-6
};

struct VerifyParams {
  int n_samples = 1000;        // oracle-certified useless samples to collect
  int max_draws = 0;           // 0 means 20 × n_samples
  int boundary_samples = 0;    // solves of random states for boundary points
  OracleParams oracle;
  SolveParams solve;
  std::uint64_t seed = 0;
};

/// Checks Tr(Wσ) ≥ −1e-6 on random states the oracle certifies as useless
/// (estimate_mef ≤ 1/d) and on projection points of random states. Failures
/// are reported through `passed`, never thrown.
WitnessVerification verify_witness(const WitnessOperator& w, int d, const VerifyParams& params,
                                   const DensityMatrix* target = nullptr);

/// Horodecki two-qubit cross-check: correlation matrix T_ij = Tr[ρ(σ_i⊗σ_j)],
/// N = Σ singular values of T and F_avg = (1 + N/3)/2.
struct TwoQubitCrosscheck {
  RealMatrix correlation;  // 3×3
  double singular_value_sum;
  double avg_fidelity;
  bool useful;  // F_avg > 2/3
};

TwoQubitCrosscheck two_qubit_crosscheck(const DensityMatrix& rho);

}  // namespace telwit
