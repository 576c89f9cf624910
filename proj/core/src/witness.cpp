#include "telwit/witness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace telwit {

namespace {

using namespace std::complex_literals;

constexpr double kSeparationTol = 1e-6;

}  // namespace

std::array<ComplexMatrix, 3> pauli_matrices() {
  ComplexMatrix x(2, 2), y(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  y << 0, -1i, 1i, 0;
  z << 1, 0, 0, -1;
  return {x, y, z};
}

std::array<ComplexMatrix, 8> gell_mann_matrices() {
  std::array<ComplexMatrix, 8> g;
  for (auto& m : g) m = ComplexMatrix::Zero(3, 3);
  // symmetric / antisymmetric pairs on (0,1), (0,2), (1,2)
  g[0](0, 1) = g[0](1, 0) = 1.0;
  g[1](0, 1) = -1i;
  g[1](1, 0) = 1i;
  g[2](0, 0) = 1.0;
  g[2](1, 1) = -1.0;
  g[3](0, 2) = g[3](2, 0) = 1.0;
  g[4](0, 2) = -1i;
  g[4](2, 0) = 1i;
  g[5](1, 2) = g[5](2, 1) = 1.0;
  g[6](1, 2) = -1i;
  g[6](2, 1) = 1i;
  const double s = 1.0 / std::sqrt(3.0);
  g[7](0, 0) = s;
  g[7](1, 1) = s;
  g[7](2, 2) = -2.0 * s;
  return g;
}

std::vector<ComplexMatrix> local_basis(int d) {
  std::vector<ComplexMatrix> basis{ComplexMatrix::Identity(d, d)};
  if (d == 2) {
    for (auto& m : pauli_matrices()) basis.push_back(m);
  } else if (d == 3) {
    for (auto& m : gell_mann_matrices()) basis.push_back(m);
  } else {
    throw Error("operator basis available only for d = 2 (Pauli) and d = 3 (Gell-Mann)");
  }
  return basis;
}

ComplexMatrix BasisDecomposition::reconstruct() const {
  const auto basis = local_basis(d);
  const Eigen::Index n = static_cast<Eigen::Index>(d) * d;
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const double c = coefficients(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      if (c != 0.0) out += c * kron(basis[i], basis[j]);
    }
  }
  return out;
}

WitnessOperator construct_witness(const DensityMatrix& rho, const DensityMatrix& sigma_star) {
  if (rho.dim_a() != sigma_star.dim_a() || rho.dim_b() != sigma_star.dim_b()) {
    throw Error("construct_witness: dimension mismatch");
  }
  const ComplexMatrix normal = sigma_star.matrix() - rho.matrix();
  if (normal.norm() <= 1e-12) throw Error("state not useful; no witness exists");
  const double shift = trace_inner(normal, sigma_star.matrix()).real();
  const Eigen::Index n = rho.dim();
  return {HermitianOperator(normal - shift * ComplexMatrix::Identity(n, n)), shift, WitnessScale::raw};
}

WitnessOperator normalize_witness(const WitnessOperator& w) {
  const double norm = w.w.frobenius_norm();
  if (norm <= 1e-12) throw Error("normalize_witness: zero witness");
  return {w.w * (1.0 / norm), w.shift / norm, WitnessScale::unit_frobenius};
}

BasisDecomposition decompose(const ComplexMatrix& w, int d) {
  const auto basis = local_basis(d);
  const Eigen::Index n = static_cast<Eigen::Index>(d) * d;
  if (w.rows() != n || w.cols() != n) throw Error("decompose: witness dimension does not match d*d");
  const auto m = static_cast<Eigen::Index>(basis.size());
  RealMatrix c(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const double ni = i == 0 ? d : 2.0;
    for (Eigen::Index j = 0; j < m; ++j) {
      const double nj = j == 0 ? d : 2.0;
      // g_i ⊗ g_j is Hermitian, so Tr[W (g_i⊗g_j)] = Tr[(g_i⊗g_j)† W].
      c(i, j) = trace_inner(kron(basis[i], basis[j]), w).real() / (ni * nj);
    }
  }
  return {d, c};
}

BasisDecomposition decompose(const WitnessOperator& w, int d) { return decompose(w.w.matrix(), d); }

double evaluate(const WitnessOperator& w, const DensityMatrix& sigma) {
  if (w.w.dim() != sigma.dim()) throw Error("evaluate: dimension mismatch");
  return frobenius_inner(w.w, sigma.op());
}

double cosine_similarity(const ComplexMatrix& a, const ComplexMatrix& b) {
  const double na = a.norm();
  const double nb = b.norm();
  if (na == 0.0 || nb == 0.0) throw Error("cosine_similarity: zero operand");
  return trace_inner(a, b).real() / (na * nb);
}

WitnessVerification verify_witness(const WitnessOperator& w, int d, const VerifyParams& params,
                                   const DensityMatrix* target) {
  if (params.n_samples < 1) throw Error("verify_witness: need at least one sample");
  if (w.w.dim() != static_cast<Eigen::Index>(d) * d) throw Error("verify_witness: dimension mismatch");
  WitnessVerification out;
  out.min_on_useless = std::numeric_limits<double>::infinity();
  out.min_on_boundary = std::numeric_limits<double>::infinity();
  const double bound = 1.0 / d;
  const int max_draws = params.max_draws > 0 ? params.max_draws : 20 * params.n_samples;

  for (int i = 0; i < max_draws && out.kept < params.n_samples; ++i) {
    const auto sample_seed = derive_seed(params.seed, static_cast<std::uint64_t>(i));
    const DensityMatrix sigma = random_density(d, sample_seed);
    ++out.sampled;
    if (estimate_mef(sigma, params.oracle, derive_seed(sample_seed, 1)).f_est > bound) continue;
    ++out.kept;
    out.min_on_useless = std::min(out.min_on_useless, evaluate(w, sigma));
  }

  for (int i = 0; i < params.boundary_samples; ++i) {
    const auto sample_seed = derive_seed(params.seed ^ 0x5bd1e995ULL, static_cast<std::uint64_t>(i));
    const DensityMatrix rho = random_density(d, sample_seed);
    SolveParams sp = params.solve;
    sp.seed = sample_seed;
    const SolveReport report = solve(rho, sp);
    ++out.boundary_samples;
    out.min_on_boundary = std::min(out.min_on_boundary, evaluate(w, report.sigma_star));
  }

  if (target != nullptr) out.value_on_target = evaluate(w, *target);
  const bool useless_ok = out.kept > 0 && out.min_on_useless >= -kSeparationTol;
  const bool boundary_ok = out.boundary_samples == 0 || out.min_on_boundary >= -kSeparationTol;
  out.passed = useless_ok && boundary_ok;
  return out;
}

TwoQubitCrosscheck two_qubit_crosscheck(const DensityMatrix& rho) {
  if (rho.dim_a() != 2 || rho.dim_b() != 2) throw Error("two-qubit cross-check needs a 2 x 2 bipartite state");
  const auto paulis = pauli_matrices();
  RealMatrix t(3, 3);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      t(i, j) = trace_inner(kron(paulis[i], paulis[j]), rho.matrix()).real();
    }
  }
  Eigen::JacobiSVD<RealMatrix> svd(t);
  const double n = svd.singularValues().sum();
  const double f_avg = 0.5 * (1.0 + n / 3.0);
  return {t, n, f_avg, f_avg > 2.0 / 3.0 + 1e-12};
}

}  // namespace telwit
