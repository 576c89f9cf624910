#include "telwit/projection.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "telwit/states.hpp"

namespace telwit {

namespace {

// V diag(simplex(λ)) V† for Hermitian y.
ComplexMatrix spectral_projection(const ComplexMatrix& y) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(y);
  if (es.info() != Eigen::Success) throw Error("spectrahedron projection: eigensolver failed");
  const RealVector lambda = simplex_projection(es.eigenvalues());
  const ComplexMatrix& v = es.eigenvectors();
  return symmetrize(v * lambda.asDiagonal() * v.adjoint());
}

}  // namespace

ConstraintSet::ConstraintSet(int d) : d_(d) {
  if (d < 2) throw Error("constraint set: local dimension must be at least 2");
}

ConstraintSet ConstraintSet::identity_only(int d) {
  ConstraintSet cs(d);
  cs.add(UnitaryMatrix::identity(d));
  return cs;
}

bool ConstraintSet::add(const UnitaryMatrix& u) {
  if (u.dim() != d_) throw Error("constraint set: unitary dimension mismatch");
  ComplexVector v = max_entangled_vector(d_, u);
  const ComplexMatrix p = v * v.adjoint();
  for (const auto& w : vectors_) {
    if ((p - w * w.adjoint()).norm() <= 1e-8) return false;
  }
  unitaries_.push_back(u);
  vectors_.push_back(std::move(v));
  return true;
}

HermitianOperator ConstraintSet::projector(std::size_t i) const {
  return HermitianOperator(vectors_.at(i) * vectors_.at(i).adjoint());
}

double ConstraintSet::max_violation(const ComplexMatrix& sigma) const {
  double worst = -std::numeric_limits<double>::infinity();
  for (const auto& v : vectors_) worst = std::max(worst, v.dot(sigma * v).real() - bound());
  return worst;
}

void ProjectionParams::validate() const {
  if (!(cycle_tol > 0.0)) throw Error("projection cycle tolerance must be positive");
  if (max_cycles < 1) throw Error("projection max cycles must be positive");
}

RealVector simplex_projection(const RealVector& v) {
  if (v.size() == 0) throw Error("simplex_projection: empty vector");
  if (!v.allFinite()) throw Error("simplex_projection: non-finite entries");
  std::vector<double> u(v.data(), v.data() + v.size());
  std::sort(u.begin(), u.end(), std::greater<>());
  double cumulative = 0.0;
  double theta = 0.0;
  for (std::size_t j = 0; j < u.size(); ++j) {
    cumulative += u[j];
    const double candidate = (cumulative - 1.0) / static_cast<double>(j + 1);
    if (u[j] - candidate > 0.0) theta = candidate;
  }
  return (v.array() - theta).cwiseMax(0.0).matrix();
}

DensityMatrix project_spectrahedron(const HermitianOperator& a, int dim_a, int dim_b) {
  const int n = static_cast<int>(a.dim());
  if (dim_a == 0 && dim_b == 0) {
    dim_a = 1;
    dim_b = n;
  }
  return DensityMatrix(dim_a, dim_b, spectral_projection(a.matrix()));
}

HermitianOperator project_halfspace(const HermitianOperator& a, const HermitianOperator& p, double bound) {
  if (a.dim() != p.dim()) throw Error("project_halfspace: dimension mismatch");
  if (std::abs(p.frobenius_norm() - 1.0) > 1e-9) throw Error("project_halfspace: normal must have unit Frobenius norm");
  const double excess = frobenius_inner(p, a) - bound;
  if (excess <= 0.0) return a;
  return a - excess * p;
}

ProjectionResult dykstra_project(const DensityMatrix& rho, const ConstraintSet& constraints,
                                 const ProjectionParams& params, DykstraWarmStart* warm) {
  params.validate();
  if (rho.dim_a() != constraints.d() || rho.dim_b() != constraints.d()) {
    throw Error("dykstra_project: state and constraint dimensions differ");
  }
  const Eigen::Index n = rho.dim();
  const double bound = constraints.bound();
  const auto& vecs = constraints.vectors();
  const std::size_t k = vecs.size();

  ComplexMatrix q = ComplexMatrix::Zero(n, n);
  std::vector<double> lambda(k, 0.0);
  if (warm != nullptr && warm->spectral_correction.rows() == n &&
      warm->halfspace_multipliers.size() <= k) {
    q = warm->spectral_correction;
    std::copy(warm->halfspace_multipliers.begin(), warm->halfspace_multipliers.end(), lambda.begin());
  }

  // Invariant: x = ρ − q − Σ λ_j P_j.
  ComplexMatrix x = rho.matrix() - q;
  for (std::size_t j = 0; j < k; ++j) x -= lambda[j] * (vecs[j] * vecs[j].adjoint());

  ComplexMatrix s = x;
  ComplexMatrix prev = x;
  int cycles = 0;
  bool converged = false;
  double violation = 0.0;
  while (cycles < params.max_cycles) {
    ++cycles;
    const ComplexMatrix y = x + q;
    s = spectral_projection(y);
    q = y - s;
    x = s;
    for (std::size_t j = 0; j < k; ++j) {
      const ComplexVector& v = vecs[j];
      const double overlap = v.dot(x * v).real() + lambda[j];  // ⟨P_j, x + λ_j P_j⟩
      const double t = std::max(0.0, overlap - bound);
      x.noalias() += (lambda[j] - t) * (v * v.adjoint());
      lambda[j] = t;
    }
    violation = k == 0 ? 0.0 : std::max(0.0, constraints.max_violation(s));
    const double change = (x - prev).norm();
    prev = x;
    if (change <= params.cycle_tol && violation <= params.cycle_tol) {
      converged = true;
      break;
    }
  }

  if (warm != nullptr) {
    warm->spectral_correction = q;
    warm->halfspace_multipliers = lambda;
  }
  return {DensityMatrix(rho.dim_a(), rho.dim_b(), s), cycles, converged, violation};
}

}  // namespace telwit
