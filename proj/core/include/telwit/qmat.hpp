// Dense complex matrix algebra and bipartite-system primitives.
//
// Composite index convention used throughout the library: for a bipartite
// system A⊗B the basis vector |a⟩|b⟩ has index a·dim_b + b, i.e. subsystem A
// is the slow (left) factor. kron, partial_trace_a and matricize all share it.

#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace telwit {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace tol {
inline constexpr double hermitian = 1e-10;
inline constexpr double unitary = 1e-10;
inline constexpr double psd = 1e-8;
inline constexpr double trace = 1e-8;
}  // namespace tol

bool all_finite(const ComplexMatrix& m);

/// (A + A†)/2.
ComplexMatrix symmetrize(const ComplexMatrix& a);

/// A square matrix equal to its adjoint. Inputs are symmetrized on
/// construction, so small asymmetries from accumulated roundoff are absorbed
/// rather than rejected; non-square or non-finite input throws.
class HermitianOperator {
 public:
  HermitianOperator() = default;
  explicit HermitianOperator(const ComplexMatrix& m);

  static HermitianOperator identity(Eigen::Index dim);
  static HermitianOperator zero(Eigen::Index dim);

  Eigen::Index dim() const { return m_.rows(); }
  const ComplexMatrix& matrix() const { return m_; }
  double trace() const { return m_.diagonal().real().sum(); }
  double frobenius_norm() const { return m_.norm(); }

  HermitianOperator operator+(const HermitianOperator& o) const;
  HermitianOperator operator-(const HermitianOperator& o) const;
  HermitianOperator operator*(double s) const;

 private:
  ComplexMatrix m_;
};

inline HermitianOperator operator*(double s, const HermitianOperator& h) { return h * s; }

/// Bipartite density operator on C^dim_a ⊗ C^dim_b: Hermitian, PSD
/// (min eigenvalue ≥ −1e-8) and unit trace (within 1e-8).
class DensityMatrix {
 public:
  DensityMatrix(int dim_a, int dim_b, HermitianOperator op);
  DensityMatrix(int dim_a, int dim_b, const ComplexMatrix& m)
      : DensityMatrix(dim_a, dim_b, HermitianOperator(m)) {}

  int dim_a() const { return dim_a_; }
  int dim_b() const { return dim_b_; }
  int dim() const { return dim_a_ * dim_b_; }
  const HermitianOperator& op() const { return op_; }
  const ComplexMatrix& matrix() const { return op_.matrix(); }

 private:
  int dim_a_;
  int dim_b_;
  HermitianOperator op_;
};

/// Square matrix with ‖U†U − I‖_F ≤ 1e-10.
class UnitaryMatrix {
 public:
  explicit UnitaryMatrix(const ComplexMatrix& m);

  static UnitaryMatrix identity(int dim);
  /// Skips the unitarity check; for outputs of factorizations that are
  /// unitary by construction (eigenvector bases, polar factors, QR).
  static UnitaryMatrix from_factorization(ComplexMatrix m);

  int dim() const { return static_cast<int>(m_.rows()); }
  const ComplexMatrix& matrix() const { return m_; }
  UnitaryMatrix adjoint() const { return from_factorization(m_.adjoint()); }

 private:
  struct Unchecked {};
  UnitaryMatrix(ComplexMatrix m, Unchecked) : m_(std::move(m)) {}
  ComplexMatrix m_;
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Tr_A of an operator on A⊗B: result[b][b'] = Σ_a X[(a,b)][(a,b')].
ComplexMatrix partial_trace_a(const ComplexMatrix& x, int dim_a, int dim_b);

/// Tr(A†B) for arbitrary same-shaped matrices.
Complex trace_inner(const ComplexMatrix& a, const ComplexMatrix& b);

/// Real Frobenius inner product Tr(A†B) of two Hermitian operators.
double frobenius_inner(const HermitianOperator& a, const HermitianOperator& b);

struct EigenDecomposition {
  RealVector values;       // ascending
  UnitaryMatrix vectors;   // columns are eigenvectors
};

EigenDecomposition hermitian_eig(const HermitianOperator& a);

struct PolarDecomposition {
  UnitaryMatrix polar;          // L·R† from M = L Σ R†
  RealVector singular_values;   // descending
};

PolarDecomposition svd_polar(const ComplexMatrix& m);

/// Reshape w on A⊗B into the dim_b × dim_a matrix with result[b][a] = w[(a,b)].
ComplexMatrix matricize(const ComplexVector& w, int dim_a, int dim_b);

}  // namespace telwit
