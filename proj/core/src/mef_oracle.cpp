#include "telwit/mef_oracle.hpp"

#include <algorithm>
#include <cmath>

#include "telwit/states.hpp"

namespace telwit {

namespace {

int local_dim(const DensityMatrix& sigma) {
  if (sigma.dim_a() != sigma.dim_b()) throw Error("maximal entangled fraction needs a d x d bipartite state");
  return sigma.dim_a();
}

double fidelity_from_vector(const ComplexMatrix& sigma, const ComplexVector& v) {
  return v.dot(sigma * v).real();  // Eigen's dot conjugates the first argument
}

// d×d matrix whose polar factor maximizes Re⟨v_U'|σ|v_U⟩ over U'.
ComplexMatrix ascent_matrix(const ComplexMatrix& sigma, int d, const UnitaryMatrix& u) {
  return matricize(sigma * max_entangled_vector(d, u), d, d);
}

}  // namespace

void OracleParams::validate() const {
  if (restarts < 1) throw Error("oracle restarts must be positive");
  if (!(inner_tol > 0.0)) throw Error("oracle inner tolerance must be positive");
  if (max_inner < 1) throw Error("oracle max inner iterations must be positive");
}

UnitaryMatrix haar_unitary(int d, Rng& rng) {
  if (d < 1) throw Error("haar_unitary: dimension must be positive");
  for (;;) {
    const ComplexMatrix z = complex_gaussian(d, d, rng);
    Eigen::HouseholderQR<ComplexMatrix> qr(z);
    const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(d, d);
    bool degenerate = false;
    for (int i = 0; i < d; ++i) {
      const double mod = std::abs(r(i, i));
      if (mod == 0.0) {
        degenerate = true;
        break;
      }
      q.col(i) *= r(i, i) / mod;
    }
    if (!degenerate) return UnitaryMatrix::from_factorization(std::move(q));
  }
}

double fidelity(const DensityMatrix& sigma, const UnitaryMatrix& u) {
  const int d = local_dim(sigma);
  return fidelity_from_vector(sigma.matrix(), max_entangled_vector(d, u));
}

AscentResult fixed_point_ascend(const DensityMatrix& sigma, const UnitaryMatrix& u0,
                                const OracleParams& params) {
  params.validate();
  const int d = local_dim(sigma);
  if (u0.dim() != d) throw Error("fixed_point_ascend: unitary dimension mismatch");
  const ComplexMatrix& s = sigma.matrix();

  UnitaryMatrix u = u0;
  double f = fidelity_from_vector(s, max_entangled_vector(d, u));
  AscentResult result{u, f, 0, false, {f}};
  for (int it = 1; it <= params.max_inner; ++it) {
    UnitaryMatrix next = svd_polar(ascent_matrix(s, d, u)).polar;
    const double delta = (next.matrix() - u.matrix()).norm();
    u = std::move(next);
    f = fidelity_from_vector(s, max_entangled_vector(d, u));
    result.trace.push_back(f);
    result.iterations = it;
    if (f >= result.fidelity) {
      result.u = u;
      result.fidelity = f;
    }
    if (delta < params.inner_tol) {
      result.converged = true;
      break;
    }
  }
  return result;
}

MefEstimate estimate_mef(const DensityMatrix& sigma, const OracleParams& params, std::uint64_t seed) {
  params.validate();
  const int d = local_dim(sigma);

  AscentResult best = fixed_point_ascend(sigma, UnitaryMatrix::identity(d), params);
  int best_index = 0;
  for (int r = 1; r <= params.restarts; ++r) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(r)));
    AscentResult run = fixed_point_ascend(sigma, haar_unitary(d, rng), params);
    if (run.fidelity > best.fidelity + 1e-12) {
      best = std::move(run);
      best_index = r;
    }
  }
  return {std::clamp(best.fidelity, 0.0, 1.0), normalize_phase(best.u), best_index, best.iterations};
}

double brute_force_mef(const DensityMatrix& sigma, int samples, Rng& rng) {
  if (samples < 1) throw Error("brute_force_mef: need at least one sample");
  const int d = local_dim(sigma);
  double best = 0.0;
  for (int i = 0; i < samples; ++i) best = std::max(best, fidelity(sigma, haar_unitary(d, rng)));
  return best;
}

double mef_to_avg_fidelity(double f, int d) {
  if (d < 2) throw Error("mef_to_avg_fidelity: dimension must be at least 2");
  return (d * f + 1.0) / (d + 1.0);
}

UnitaryMatrix normalize_phase(const UnitaryMatrix& u) {
  const ComplexMatrix& m = u.matrix();
  const double max_mod = m.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (std::abs(m(i, j)) >= max_mod - 1e-12) {
        const Complex phase = std::conj(m(i, j)) / std::abs(m(i, j));
        return UnitaryMatrix::from_factorization(phase * m);
      }
    }
  }
  return u;
}

}  // namespace telwit
