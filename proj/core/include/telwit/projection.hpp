// Frobenius projection onto the relaxed useless set
//   { σ ⪰ 0, Tr σ = 1, Tr(σ P_U) ≤ 1/d for every U in a finite active set }.
//
// Both building blocks have closed forms (eigenvalue simplex projection for
// the spectrahedron, a rank-1 correction for each half-space), so the
// intersection is handled with Dykstra's algorithm, which keeps one
// correction term per set and converges to the nearest point rather than to
// an arbitrary feasible one.

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "telwit/qmat.hpp"

namespace telwit {

/// Finite family of constraints Tr(σ P_U) ≤ 1/d, with P_U the projector onto
/// (I⊗U)|Φ_d⁺⟩. Insertion order is preserved and duplicates (projectors within
/// 1e-8 in Frobenius norm of an existing one) are dropped.
class ConstraintSet {
 public:
  explicit ConstraintSet(int d);
  /// The initial active set {I}.
  static ConstraintSet identity_only(int d);

  /// Returns false when the projector duplicates an existing constraint.
  bool add(const UnitaryMatrix& u);

  int d() const { return d_; }
  double bound() const { return 1.0 / d_; }
  std::size_t size() const { return unitaries_.size(); }
  bool empty() const { return unitaries_.empty(); }
  const std::vector<UnitaryMatrix>& unitaries() const { return unitaries_; }
  const std::vector<ComplexVector>& vectors() const { return vectors_; }
  HermitianOperator projector(std::size_t i) const;

  /// max_i Tr(σ P_i) − 1/d, or −∞ for an empty set.
  double max_violation(const ComplexMatrix& sigma) const;

 private:
  int d_;
  std::vector<UnitaryMatrix> unitaries_;
  std::vector<ComplexVector> vectors_;
};

struct ProjectionParams {
  double cycle_tol = 1e-9;
  int max_cycles = 200000;

  void validate() const;
};

/// Euclidean projection onto the probability simplex {x ≥ 0, Σx = 1}.
RealVector simplex_projection(const RealVector& v);

/// Nearest density matrix to A: eigenvalues projected onto the simplex.
/// dim_a = 0 treats A as a single system (split 1 × n).
DensityMatrix project_spectrahedron(const HermitianOperator& a, int dim_a = 0, int dim_b = 0);

/// Projection onto {X : ⟨P, X⟩ ≤ bound} for a unit-norm normal P.
HermitianOperator project_halfspace(const HermitianOperator& a, const HermitianOperator& p, double bound);

/// Dykstra correction terms; reusing them across calls with the same target
/// and a growing constraint set starts the iteration from the previous dual
/// point.
struct DykstraWarmStart {
  ComplexMatrix spectral_correction;
  std::vector<double> halfspace_multipliers;
};

struct ProjectionResult {
  DensityMatrix sigma;
  int cycles;
  bool converged;
  double max_violation;  // largest Tr(σ P_i) − 1/d at the returned point
};

ProjectionResult dykstra_project(const DensityMatrix& rho, const ConstraintSet& constraints,
                                 const ProjectionParams& params = {},
                                 DykstraWarmStart* warm = nullptr);

}  // namespace telwit
