#include "telwit/qmat.hpp"

#include <algorithm>
#include <cmath>

namespace telwit {

bool all_finite(const ComplexMatrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) return false;
    }
  }
  return true;
}

ComplexMatrix symmetrize(const ComplexMatrix& a) { return 0.5 * (a + a.adjoint()); }

HermitianOperator::HermitianOperator(const ComplexMatrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw Error("hermitian operator must be a non-empty square matrix");
  }
  if (!all_finite(m)) throw Error("hermitian operator has non-finite entries");
  const double skew = (m - m.adjoint()).norm();
  if (skew > tol::hermitian * std::max(1.0, m.norm())) {
    throw Error("matrix is not Hermitian: ||A - A^dagger||_F = " + std::to_string(skew));
  }
  m_ = symmetrize(m);
}

HermitianOperator HermitianOperator::identity(Eigen::Index dim) {
  return HermitianOperator(ComplexMatrix::Identity(dim, dim));
}

HermitianOperator HermitianOperator::zero(Eigen::Index dim) {
  return HermitianOperator(ComplexMatrix::Zero(dim, dim));
}

HermitianOperator HermitianOperator::operator+(const HermitianOperator& o) const {
  if (o.dim() != dim()) throw Error("dimension mismatch");
  return HermitianOperator(m_ + o.m_);
}

HermitianOperator HermitianOperator::operator-(const HermitianOperator& o) const {
  if (o.dim() != dim()) throw Error("dimension mismatch");
  return HermitianOperator(m_ - o.m_);
}

HermitianOperator HermitianOperator::operator*(double s) const { return HermitianOperator(s * m_); }

DensityMatrix::DensityMatrix(int dim_a, int dim_b, HermitianOperator op)
    : dim_a_(dim_a), dim_b_(dim_b), op_(std::move(op)) {
  if (dim_a < 1 || dim_b < 1 || op_.dim() != static_cast<Eigen::Index>(dim_a) * dim_b) {
    throw Error("bad bipartite split");
  }
  const double tr = op_.trace();
  if (std::abs(tr - 1.0) > tol::trace) {
    throw Error("density matrix trace invariant violated: trace = " + std::to_string(tr));
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(op_.matrix(), Eigen::EigenvaluesOnly);
  const double min_eig = es.eigenvalues()(0);
  if (min_eig < -tol::psd) {
    throw Error("density matrix positivity invariant violated: min eigenvalue = " +
                std::to_string(min_eig));
  }
}

UnitaryMatrix::UnitaryMatrix(const ComplexMatrix& m) : m_(m) {
  if (m.rows() != m.cols() || m.rows() == 0) throw Error("unitary must be a non-empty square matrix");
  if (!all_finite(m)) throw Error("unitary has non-finite entries");
  const double defect = (m.adjoint() * m - ComplexMatrix::Identity(m.rows(), m.cols())).norm();
  if (defect > tol::unitary) throw Error("matrix is not unitary: ||U'U - I|| = " + std::to_string(defect));
}

UnitaryMatrix UnitaryMatrix::identity(int dim) {
  return UnitaryMatrix(ComplexMatrix::Identity(dim, dim), Unchecked{});
}

UnitaryMatrix UnitaryMatrix::from_factorization(ComplexMatrix m) {
  return UnitaryMatrix(std::move(m), Unchecked{});
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix partial_trace_a(const ComplexMatrix& x, int dim_a, int dim_b) {
  const Eigen::Index n = static_cast<Eigen::Index>(dim_a) * dim_b;
  if (dim_a < 1 || dim_b < 1 || x.rows() != n || x.cols() != n) {
    throw Error("bad bipartite split");
  }
  ComplexMatrix out = ComplexMatrix::Zero(dim_b, dim_b);
  for (int a = 0; a < dim_a; ++a) {
    out += x.block(a * dim_b, a * dim_b, dim_b, dim_b);
  }
  return out;
}

Complex trace_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error("dimension mismatch");
  // Tr(A†B) = Σ conj(a_ij) b_ij
  return a.conjugate().cwiseProduct(b).sum();
}

double frobenius_inner(const HermitianOperator& a, const HermitianOperator& b) {
  if (a.dim() != b.dim()) throw Error("dimension mismatch");
  const Complex v = trace_inner(a.matrix(), b.matrix());
  const double scale = a.frobenius_norm() * b.frobenius_norm();
  if (std::abs(v.imag()) > 1e-10 * std::max(scale, 1e-300)) {
    throw Error("frobenius_inner: non-negligible imaginary part for Hermitian inputs");
  }
  return v.real();
}

EigenDecomposition hermitian_eig(const HermitianOperator& a) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(a.matrix());
  if (es.info() != Eigen::Success) throw Error("hermitian_eig: eigensolver failed");
  return {es.eigenvalues(), UnitaryMatrix::from_factorization(es.eigenvectors())};
}

PolarDecomposition svd_polar(const ComplexMatrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) throw Error("svd_polar: matrix must be square");
  if (!all_finite(m)) throw Error("svd_polar: non-finite entries");
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return {UnitaryMatrix::from_factorization(svd.matrixU() * svd.matrixV().adjoint()),
          svd.singularValues()};
}

ComplexMatrix matricize(const ComplexVector& w, int dim_a, int dim_b) {
  if (dim_a < 1 || dim_b < 1 || w.size() != static_cast<Eigen::Index>(dim_a) * dim_b) {
    throw Error("matricize: length mismatch");
  }
  ComplexMatrix out(dim_b, dim_a);
  for (int a = 0; a < dim_a; ++a) {
    for (int b = 0; b < dim_b; ++b) out(b, a) = w(a * dim_b + b);
  }
  return out;
}

}  // namespace telwit
