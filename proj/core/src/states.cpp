#include "telwit/states.hpp"

#include <cmath>

namespace telwit {

namespace {

void check_visibility(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error("visibility p must lie in [0, 1], got " + std::to_string(p));
}

ComplexMatrix outer(const ComplexVector& v) { return v * v.adjoint(); }

ComplexVector basis_vector(Eigen::Index n, Eigen::Index i) {
  ComplexVector e = ComplexVector::Zero(n);
  e(i) = 1.0;
  return e;
}

}  // namespace

std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::werner: return "werner";
    case FamilyKind::mems: return "mems";
    case FamilyKind::qutrit_nme: return "qutrit_nme";
  }
  return "unknown";
}

FamilyKind parse_family_kind(std::string_view name) {
  if (name == "werner") return FamilyKind::werner;
  if (name == "mems") return FamilyKind::mems;
  if (name == "qutrit_nme") return FamilyKind::qutrit_nme;
  throw Error("unknown state family '" + std::string(name) + "' (expected werner, mems or qutrit_nme)");
}

int family_local_dim(FamilyKind kind) { return kind == FamilyKind::qutrit_nme ? 3 : 2; }

ComplexVector phi_plus(int d) {
  if (d < 2) throw Error("phi_plus: local dimension must be at least 2");
  ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(d) * d);
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (int i = 0; i < d; ++i) v(i * d + i) = amp;
  return v;
}

ComplexVector max_entangled_vector(int d, const UnitaryMatrix& u) {
  if (u.dim() != d) throw Error("max_entangled_projector: unitary dimension mismatch");
  // (I⊗U)|Φ⁺⟩ has amplitude U[b][a]/√d at composite index (a, b).
  ComplexVector v(static_cast<Eigen::Index>(d) * d);
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) v(a * d + b) = amp * u.matrix()(b, a);
  }
  return v;
}

HermitianOperator max_entangled_projector(int d, const UnitaryMatrix& u) {
  return HermitianOperator(outer(max_entangled_vector(d, u)));
}

DensityMatrix werner(double p) {
  check_visibility(p);
  const ComplexMatrix m = p * outer(phi_plus(2)) + (1.0 - p) * 0.25 * ComplexMatrix::Identity(4, 4);
  return DensityMatrix(2, 2, m);
}

ComplexVector psi_minus() {
  ComplexVector v = ComplexVector::Zero(4);
  v(1) = 1.0 / std::sqrt(2.0);
  v(2) = -1.0 / std::sqrt(2.0);
  return v;
}

ComplexVector psi_plus() {
  ComplexVector v = ComplexVector::Zero(4);
  v(1) = 1.0 / std::sqrt(2.0);
  v(2) = 1.0 / std::sqrt(2.0);
  return v;
}

DensityMatrix mems(double p) {
  check_visibility(p);
  const double l1 = (1.0 + 2.0 * p) / 3.0;
  const double l23 = (1.0 - p) / 3.0;
  const ComplexMatrix m =
      l1 * outer(psi_minus()) + l23 * outer(basis_vector(4, 0)) + l23 * outer(psi_plus());
  return DensityMatrix(2, 2, m);
}

DensityMatrix sigma_plus() {
  ComplexMatrix m = ComplexMatrix::Zero(9, 9);
  for (int i = 0; i < 3; ++i) {
    const int idx = i * 3 + (i + 1) % 3;
    m(idx, idx) = 1.0 / 3.0;
  }
  return DensityMatrix(3, 3, m);
}

ComplexVector psi_nme() {
  ComplexVector v = ComplexVector::Zero(9);
  v(0) = std::sqrt(2.0 / 3.0);
  v(4) = std::sqrt(1.0 / 6.0);
  v(8) = std::sqrt(1.0 / 6.0);
  return v;
}

DensityMatrix qutrit_nme(double p) {
  check_visibility(p);
  const ComplexMatrix m = p * outer(psi_nme()) + (1.0 - p) * sigma_plus().matrix();
  return DensityMatrix(3, 3, m);
}

DensityMatrix make_state(const StateFamily& family) {
  switch (family.kind) {
    case FamilyKind::werner: return werner(family.p);
    case FamilyKind::mems: return mems(family.p);
    case FamilyKind::qutrit_nme: return qutrit_nme(family.p);
  }
  throw Error("unknown state family");
}

DensityMatrix random_density(int d, Rng& rng) {
  if (d < 2) throw Error("random_density: local dimension must be at least 2");
  const Eigen::Index n = static_cast<Eigen::Index>(d) * d;
  const ComplexMatrix g = complex_gaussian(n, n, rng);
  const ComplexMatrix gram = g * g.adjoint();
  return DensityMatrix(d, d, gram / gram.trace().real());
}

DensityMatrix random_density(int d, std::uint64_t seed) {
  Rng rng(seed);
  return random_density(d, rng);
}

}  // namespace telwit
