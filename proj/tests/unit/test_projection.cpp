#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "support/oracles.hpp"
#include "telwit/mef_oracle.hpp"
#include "telwit/projection.hpp"
#include "telwit/states.hpp"

namespace telwit {
namespace {

ConstraintSet random_constraints(int d, int count, Rng& rng) {
  ConstraintSet cs(d);
  cs.add(UnitaryMatrix::identity(d));
  while (static_cast<int>(cs.size()) < count) cs.add(haar_unitary(d, rng));
  return cs;
}

double min_eig(const ComplexMatrix& m) {
  return Eigen::SelfAdjointEigenSolver<ComplexMatrix>(m, Eigen::EigenvaluesOnly).eigenvalues()(0);
}

TEST(SimplexProjection, WorkedExample) {
  RealVector v(3);
  v << 0.8, 0.4, -0.2;
  const RealVector x = simplex_projection(v);
  EXPECT_NEAR(x(0), 0.7, 1e-15);
  EXPECT_NEAR(x(1), 0.3, 1e-15);
  EXPECT_NEAR(x(2), 0.0, 1e-15);
  EXPECT_LE((x - testing::simplex_by_enumeration(v)).norm(), 1e-14);
}

TEST(SimplexProjection, FeasibleAndSymmetricInputs) {
  RealVector v = RealVector::Zero(4);
  v(0) = 1.0;
  EXPECT_EQ(simplex_projection(v), v);
  for (double c : {-3.0, 0.0, 0.1, 7.5}) {
    const RealVector x = simplex_projection(RealVector::Constant(4, c));
    for (int i = 0; i < 4; ++i) EXPECT_NEAR(x(i), 0.25, 1e-15);
  }
  EXPECT_THROW(simplex_projection(RealVector()), Error);
}

TEST(SimplexProjection, MatchesSupportEnumeration) {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> n(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    RealVector v(1 + trial % 9);
    for (auto& x : v) x = n(rng);
    EXPECT_LE((simplex_projection(v) - testing::simplex_by_enumeration(v)).norm(), 1e-12);
  }
}

TEST(ProjectSpectrahedron, FixedPointOnStates) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const DensityMatrix r = random_density(2, seed);
    EXPECT_LE((project_spectrahedron(r.op(), 2, 2).matrix() - r.matrix()).norm(), 1e-10);
  }
}

TEST(ProjectSpectrahedron, DiagonalExampleAndZero) {
  ComplexMatrix a = ComplexMatrix::Zero(4, 4);
  a.diagonal() << 0.8, 0.4, -0.2, 0.0;
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected.diagonal() << 0.7, 0.3, 0.0, 0.0;
  EXPECT_LE((project_spectrahedron(HermitianOperator(a)).matrix() - expected).norm(), 1e-14);
  for (int n : {3, 4, 9}) {
    const DensityMatrix z = project_spectrahedron(HermitianOperator::zero(n));
    EXPECT_LE((z.matrix() - ComplexMatrix::Identity(n, n) / n).norm(), 1e-14);
  }
}

TEST(ProjectSpectrahedron, MatchesBisectionOracle) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    const ComplexMatrix a = testing::random_hermitian(6, rng);
    EXPECT_LE((project_spectrahedron(HermitianOperator(a)).matrix() - testing::spectrahedron_by_bisection(a)).norm(),
              1e-10);
  }
}

TEST(ProjectHalfspace, CasesAndClosedForm) {
  const HermitianOperator p0 = max_entangled_projector(2, UnitaryMatrix::identity(2));
  EXPECT_LE((project_halfspace(p0, p0, 0.5).matrix() - 0.5 * p0.matrix()).norm(), 1e-15);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const HermitianOperator a(testing::random_hermitian(4, rng));
    const double b = 0.3 * trial / 50.0 - 0.1;
    const HermitianOperator r = project_halfspace(a, p0, b);
    EXPECT_NEAR(frobenius_inner(p0, r), std::min(frobenius_inner(p0, a), b), 1e-12);
  }
  // already feasible: ⟨P, A⟩ = 0.3 ≤ 0.5
  const HermitianOperator a = p0 * 0.3;
  EXPECT_EQ(project_halfspace(a, p0, 0.5).matrix(), a.matrix());
  EXPECT_THROW(project_halfspace(a, p0 * 2.0, 0.5), Error);
}

TEST(ConstraintSet, RejectsDuplicates) {
  ConstraintSet cs = ConstraintSet::identity_only(2);
  EXPECT_EQ(cs.size(), 1u);
  // a global phase leaves P_U unchanged
  EXPECT_FALSE(cs.add(UnitaryMatrix::from_factorization(Complex(0, 1) * ComplexMatrix::Identity(2, 2))));
  Rng rng(1);
  const UnitaryMatrix u = haar_unitary(2, rng);
  EXPECT_TRUE(cs.add(u));
  EXPECT_FALSE(cs.add(u));
  EXPECT_EQ(cs.size(), 2u);
  EXPECT_LE((cs.projector(1).matrix() - max_entangled_projector(2, u).matrix()).norm(), 1e-10);
  EXPECT_THROW(cs.add(UnitaryMatrix::identity(3)), Error);
}

TEST(DykstraProject, FeasibleInputReturnsItselfInOneCycle) {
  const auto r = dykstra_project(werner(0.2), ConstraintSet::identity_only(2));
  EXPECT_LE((r.sigma.matrix() - werner(0.2).matrix()).norm(), 1e-12);
  EXPECT_EQ(r.cycles, 1);
  EXPECT_TRUE(r.converged);
}

TEST(DykstraProject, BellStateProjectsToBoundaryWerner) {
  // Symmetry reduction: σ = αP₀ + (1−α)(I−P₀)/3 with α ≤ 1/2 gives α = 1/2,
  // i.e. werner(1/3), at distance √((4/3)(1/2)²) = 1/√3.
  const auto r = dykstra_project(werner(1), ConstraintSet::identity_only(2));
  EXPECT_LE((r.sigma.matrix() - werner(1.0 / 3.0).matrix()).cwiseAbs().maxCoeff(), 1e-6);
  EXPECT_NEAR((r.sigma.matrix() - werner(1).matrix()).norm(), 1.0 / std::sqrt(3.0), 1e-6);
}

TEST(DykstraProject, NoConstraintsIsSpectrahedronProjection) {
  const DensityMatrix rho = random_density(2, 4ULL);
  const auto r = dykstra_project(rho, ConstraintSet(2));
  EXPECT_LE((r.sigma.matrix() - rho.matrix()).norm(), 1e-12);
}

TEST(DykstraProject, FeasibilityAndOptimalityCertificate) {
  Rng rng(2718);
  for (int instance = 0; instance < 20; ++instance) {
    const int d = 2 + instance % 2;
    const ConstraintSet cs = random_constraints(d, 1 + instance % 10, rng);
    const DensityMatrix rho = random_density(d, rng);
    const auto r = dykstra_project(rho, cs);
    ASSERT_TRUE(r.converged);
    const ComplexMatrix& s = r.sigma.matrix();
    EXPECT_GE(min_eig(s), -1e-8);
    EXPECT_NEAR(s.trace().real(), 1.0, 1e-8);
    EXPECT_LE(cs.max_violation(s), 1e-8);

    const ComplexMatrix normal = rho.matrix() - s;
    for (int k = 0; k < 20; ++k) {
      const auto other = dykstra_project(random_density(d, rng), cs);
      EXPECT_LE(trace_inner(normal, other.sigma.matrix() - s).real(), 1e-6);
    }
  }
}

TEST(DykstraProject, AgreesWithDualAscentOracle) {
  Rng rng(42);
  for (int instance = 0; instance < 6; ++instance) {
    const int d = 2 + instance % 2;
    const ConstraintSet cs = random_constraints(d, 2 + instance, rng);
    const DensityMatrix rho = random_density(d, rng);
    // Push ρ outward so that several cuts are active.
    const ComplexMatrix p = cs.projector(0).matrix();
    const DensityMatrix target(d, d, 0.5 * rho.matrix() + 0.5 * p);
    const auto r = dykstra_project(target, cs);
    const ComplexMatrix ref = testing::projection_by_dual_ascent(target.matrix(), cs.vectors(), cs.bound());
    EXPECT_LE((r.sigma.matrix() - ref).norm(), 1e-6) << "instance " << instance;
  }
}

TEST(DykstraProject, IdempotentAndMonotoneInConstraints) {
  Rng rng(77);
  for (int instance = 0; instance < 10; ++instance) {
    const int d = 2 + instance % 2;
    ConstraintSet cs = random_constraints(d, 3, rng);
    const DensityMatrix rho = random_density(d, rng);
    const auto first = dykstra_project(rho, cs);
    const auto again = dykstra_project(first.sigma, cs);
    EXPECT_LE((again.sigma.matrix() - first.sigma.matrix()).norm(), 1e-7);

    const double before = (rho.matrix() - first.sigma.matrix()).norm();
    cs.add(haar_unitary(d, rng));
    const double after = (rho.matrix() - dykstra_project(rho, cs).sigma.matrix()).norm();
    EXPECT_GE(after, before - 1e-9);
  }
}

TEST(DykstraProject, WarmStartReachesSameProjection) {
  Rng rng(5);
  const DensityMatrix rho = random_density(3, rng);
  ConstraintSet cs = random_constraints(3, 2, rng);
  DykstraWarmStart warm;
  dykstra_project(rho, cs, {}, &warm);
  cs.add(haar_unitary(3, rng));
  cs.add(haar_unitary(3, rng));
  const auto warm_result = dykstra_project(rho, cs, {}, &warm);
  const auto cold_result = dykstra_project(rho, cs);
  EXPECT_LE((warm_result.sigma.matrix() - cold_result.sigma.matrix()).norm(), 1e-7);
}

TEST(DykstraProject, ReportsUnconvergedAtCycleLimit) {
  ProjectionParams params;
  params.max_cycles = 1;
  const auto r = dykstra_project(werner(1), ConstraintSet::identity_only(2), params);
  EXPECT_FALSE(r.converged);
  EXPECT_EQ(r.cycles, 1);
}

TEST(DykstraProject, RejectsDimensionMismatch) {
  EXPECT_THROW(dykstra_project(werner(0.5), ConstraintSet::identity_only(3)), Error);
}

}  // namespace
}  // namespace telwit
