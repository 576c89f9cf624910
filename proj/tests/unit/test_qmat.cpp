#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "support/oracles.hpp"
#include "telwit/mef_oracle.hpp"
#include "telwit/qmat.hpp"
#include "telwit/states.hpp"

namespace telwit {
namespace {

using namespace std::complex_literals;
using testing::random_complex;
using testing::random_hermitian;
using testing::unitary_by_exponential;

ComplexMatrix sigma_x() {
  ComplexMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

ComplexMatrix p0(int d) {
  const ComplexVector v = phi_plus(d);
  return v * v.adjoint();
}

TEST(Kron, IdentityTimesIdentity) {
  EXPECT_TRUE(kron(ComplexMatrix::Identity(2, 2), ComplexMatrix::Identity(2, 2)).isApprox(ComplexMatrix::Identity(4, 4)));
}

TEST(Kron, SigmaXTensorIdentityIsPermutation) {
  const ComplexMatrix k = kron(sigma_x(), ComplexMatrix::Identity(2, 2));
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected(0, 2) = expected(1, 3) = expected(2, 0) = expected(3, 1) = 1.0;
  EXPECT_EQ(k, expected);
}

TEST(Kron, DiagonalBlocks) {
  ComplexMatrix a = ComplexMatrix::Zero(2, 2), b = ComplexMatrix::Zero(2, 2);
  a.diagonal() << 2.0, 3.0;
  b.diagonal() << 5.0, 7.0;
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected.diagonal() << 10.0, 14.0, 15.0, 21.0;
  EXPECT_EQ(kron(a, b), expected);
}

TEST(Kron, AssociativeAndBilinear) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix a = random_complex(2, 3, rng), b = random_complex(3, 2, rng), c = random_complex(2, 2, rng);
    EXPECT_LE((kron(kron(a, b), c) - kron(a, kron(b, c))).norm(), 1e-12);
    const ComplexMatrix a2 = random_complex(2, 3, rng);
    const Complex alpha(0.3, -1.2);
    EXPECT_LE((kron(alpha * a + a2, b) - (alpha * kron(a, b) + kron(a2, b))).norm(), 1e-12);
    EXPECT_LE((kron(a, alpha * b) - alpha * kron(a, b)).norm(), 1e-12);
  }
}

TEST(PartialTrace, MaximallyEntangledReducesToMaximallyMixed) {
  EXPECT_LE((partial_trace_a(p0(2), 2, 2) - 0.5 * ComplexMatrix::Identity(2, 2)).norm(), 1e-15);
}

TEST(PartialTrace, ProductBasisState) {
  ComplexMatrix ket00 = ComplexMatrix::Zero(4, 4);
  ket00(0, 0) = 1.0;
  ComplexMatrix expected = ComplexMatrix::Zero(2, 2);
  expected(0, 0) = 1.0;
  EXPECT_EQ(partial_trace_a(ket00, 2, 2), expected);
}

TEST(PartialTrace, OfTensorProductIsTraceTimesFactor) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const ComplexMatrix a = random_complex(2, 2, rng), b = random_complex(3, 3, rng);
    EXPECT_LE((partial_trace_a(kron(a, b), 2, 3) - a.trace() * b).norm(), 1e-12);
  }
}

TEST(PartialTrace, PreservesTrace) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix x = random_complex(6, 6, rng);
    EXPECT_LE(std::abs(partial_trace_a(x, 3, 2).trace() - x.trace()), 1e-12);
  }
}

TEST(PartialTrace, RejectsBadSplit) {
  EXPECT_THROW(partial_trace_a(ComplexMatrix::Identity(4, 4), 3, 2), Error);
  try {
    partial_trace_a(ComplexMatrix::Identity(5, 5), 2, 2);
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "bad bipartite split");
  }
}

TEST(FrobeniusInner, ClosedForms) {
  const HermitianOperator id = HermitianOperator::identity(4);
  const HermitianOperator p(p0(2));
  EXPECT_DOUBLE_EQ(frobenius_inner(id, id), 4.0);
  EXPECT_NEAR(frobenius_inner(p, p), 1.0, 1e-15);
  EXPECT_NEAR(frobenius_inner(p, id * 0.25), 0.25, 1e-15);
}

TEST(FrobeniusInner, SelfInnerIsSquaredNorm) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const HermitianOperator a(random_hermitian(5, rng));
    const double v = frobenius_inner(a, a);
    EXPECT_GE(v, 0.0);
    EXPECT_NEAR(v, a.frobenius_norm() * a.frobenius_norm(), 1e-12 * std::max(1.0, v));
  }
}

TEST(FrobeniusInner, DimensionMismatchThrows) {
  EXPECT_THROW(frobenius_inner(HermitianOperator::identity(2), HermitianOperator::identity(3)), Error);
}

TEST(HermitianOperator, SymmetrizesOnIngestion) {
  ComplexMatrix m(2, 2);
  m << 1.0, 1e-14, 0.0, 2.0;
  const HermitianOperator h(m);
  EXPECT_EQ(h.matrix(), h.matrix().adjoint());
  ComplexMatrix bad = ComplexMatrix::Identity(2, 2);
  bad(0, 1) = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(HermitianOperator{bad}, Error);
  m(0, 1) = 0.3;
  EXPECT_THROW(HermitianOperator{m}, Error);
}

TEST(HermitianEig, Diagonal) {
  ComplexMatrix m = ComplexMatrix::Zero(3, 3);
  m.diagonal() << 3.0, 1.0, 2.0;
  const auto e = hermitian_eig(HermitianOperator(m));
  EXPECT_NEAR(e.values(0), 1.0, 1e-15);
  EXPECT_NEAR(e.values(1), 2.0, 1e-15);
  EXPECT_NEAR(e.values(2), 3.0, 1e-15);
}

TEST(HermitianEig, PauliX) {
  const auto e = hermitian_eig(HermitianOperator(sigma_x()));
  EXPECT_NEAR(e.values(0), -1.0, 1e-15);
  EXPECT_NEAR(e.values(1), 1.0, 1e-15);
  ComplexVector minus(2), plus(2);
  minus << 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0);
  plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(std::abs(e.vectors.matrix().col(0).dot(minus)), 1.0, 1e-12);
  EXPECT_NEAR(std::abs(e.vectors.matrix().col(1).dot(plus)), 1.0, 1e-12);
}

TEST(HermitianEig, RankOneProjector) {
  const auto e = hermitian_eig(HermitianOperator(p0(2)));
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(e.values(i), 0.0, 1e-14);
  EXPECT_NEAR(e.values(3), 1.0, 1e-14);
}

TEST(HermitianEig, ReconstructionAndDensityTrace) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const DensityMatrix rho = random_density(3, seed);
    const auto e = hermitian_eig(rho.op());
    const ComplexMatrix& v = e.vectors.matrix();
    EXPECT_LE((v * e.values.asDiagonal() * v.adjoint() - rho.matrix()).norm(), 1e-9);
    EXPECT_NEAR(e.values.sum(), 1.0, 1e-9);
    for (int i = 1; i < e.values.size(); ++i) EXPECT_LE(e.values(i - 1), e.values(i));
  }
}

TEST(SvdPolar, Identity) {
  const auto r = svd_polar(ComplexMatrix::Identity(3, 3));
  EXPECT_LE((r.polar.matrix() - ComplexMatrix::Identity(3, 3)).norm(), 1e-14);
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(r.singular_values(i), 1.0, 1e-14);
}

TEST(SvdPolar, ScaledUnitary) {
  std::mt19937_64 rng(21);
  const ComplexMatrix v = unitary_by_exponential(3, rng);
  const auto r = svd_polar(2.0 * v);
  // M = 2V has an invertible polar factor, so the result is exactly V.
  EXPECT_LE((r.polar.matrix() - v).norm(), 1e-8);
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(r.singular_values(i), 2.0, 1e-12);
}

TEST(SvdPolar, RankDeficient) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = 3.0;
  const auto r = svd_polar(m);
  EXPECT_NEAR(r.singular_values(0), 3.0, 1e-14);
  EXPECT_NEAR(r.singular_values(1), 0.0, 1e-14);
  const ComplexMatrix& u = r.polar.matrix();
  EXPECT_LE((u.adjoint() * u - ComplexMatrix::Identity(2, 2)).norm(), 1e-12);
  EXPECT_NEAR(std::abs(u(0, 0)), 1.0, 1e-12);
}

TEST(SvdPolar, PolarFactorMaximizesRealTrace) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const ComplexMatrix m = random_complex(3, 3, rng);
    const auto r = svd_polar(m);
    // M = U_polar · H with H = R Σ R† Hermitian PSD whose spectrum is Σ.
    const ComplexMatrix h = r.polar.matrix().adjoint() * m;
    EXPECT_LE((h - h.adjoint()).norm(), 1e-9 * std::max(1.0, m.norm()));
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (h + h.adjoint()));
    for (int i = 0; i < 3; ++i) EXPECT_NEAR(es.eigenvalues()(2 - i), r.singular_values(i), 1e-9);
    const double best = (r.polar.matrix().adjoint() * m).trace().real();
    for (int k = 0; k < 100; ++k) {
      const ComplexMatrix v = unitary_by_exponential(3, rng);
      ASSERT_GE(best, (v.adjoint() * m).trace().real() - 1e-9);
    }
  }
}

TEST(SvdPolar, RejectsNonSquareAndNonFinite) {
  EXPECT_THROW(svd_polar(ComplexMatrix::Zero(2, 3)), Error);
  ComplexMatrix m = ComplexMatrix::Identity(2, 2);
  m(1, 1) = std::numeric_limits<double>::infinity();
  EXPECT_THROW(svd_polar(m), Error);
}

TEST(Matricize, MaximallyEntangledVector) {
  ComplexVector w(4);
  w << 1, 0, 0, 1;
  EXPECT_EQ(matricize(w, 2, 2), ComplexMatrix::Identity(2, 2));
}

TEST(Matricize, ReshapeOfRotatedMaximallyEntangledStateIsUnitary) {
  std::mt19937_64 rng(4);
  for (int d : {2, 3, 4}) {
    const ComplexMatrix u = unitary_by_exponential(d, rng);
    const ComplexVector v = kron(ComplexMatrix::Identity(d, d), u) * phi_plus(d) * std::sqrt(double(d));
    EXPECT_LE((matricize(v, d, d) - u).norm(), 1e-12);
  }
}

TEST(Matricize, BasisVector) {
  ComplexVector e = ComplexVector::Zero(4);
  e(0 * 2 + 1) = 1.0;  // (a, b) = (0, 1)
  ComplexMatrix expected = ComplexMatrix::Zero(2, 2);
  expected(1, 0) = 1.0;
  EXPECT_EQ(matricize(e, 2, 2), expected);
  EXPECT_THROW(matricize(e, 2, 3), Error);
}

TEST(UnitaryMatrix, RejectsNonUnitary) {
  EXPECT_THROW(UnitaryMatrix(2.0 * ComplexMatrix::Identity(2, 2)), Error);
  EXPECT_NO_THROW(UnitaryMatrix{sigma_x()});
}

TEST(DensityMatrix, ValidatesTraceAndPositivity) {
  EXPECT_THROW(DensityMatrix(2, 2, 0.9 / 4.0 * ComplexMatrix::Identity(4, 4)), Error);
  ComplexMatrix neg = ComplexMatrix::Zero(4, 4);
  neg.diagonal() << 1.1, -0.1, 0.0, 0.0;
  EXPECT_THROW(DensityMatrix(2, 2, neg), Error);
  EXPECT_THROW(DensityMatrix(2, 3, 0.25 * ComplexMatrix::Identity(4, 4)), Error);
}

}  // namespace
}  // namespace telwit
