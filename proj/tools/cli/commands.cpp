#include "cli/commands.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "cli/state_io.hpp"

namespace telwit::cli {

namespace {

using nlohmann::json;

bool write_file(const std::filesystem::path& path, const std::string& content, std::ostream& err) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) {
    err << "error: cannot write '" << path.string() << "'\n";
    return false;
  }
  f << content;
  f.flush();
  if (!f) {
    err << "error: failed writing '" << path.string() << "'\n";
    return false;
  }
  return true;
}

std::string term_label(int d, int i, int j) {
  static const char* pauli[] = {"I", "σx", "σy", "σz"};
  const auto single = [&](int k) -> std::string {
    if (d == 2) return pauli[k];
    return k == 0 ? "I" : "λ" + std::to_string(k);
  };
  return single(i) + "⊗" + single(j);
}

std::string pad_right(const std::string& s, std::size_t width) {
  std::size_t glyphs = 0;
  for (unsigned char c : s) glyphs += (c & 0xC0) != 0x80;
  return glyphs >= width ? s : s + std::string(width - glyphs, ' ');
}

void print_table(const BasisDecomposition& dec, std::ostream& out) {
  const auto m = dec.coefficients.rows();
  out << "coefficients (" << dec.basis_name() << " basis, unit-norm witness):\n";
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      const double c = round_to(dec.coefficients(i, j), 6);
      if (c == 0.0) continue;
      out << "  " << pad_right(term_label(dec.d, static_cast<int>(i), static_cast<int>(j)), 10) << std::showpos
          << std::fixed << std::setprecision(6) << c << std::noshowpos << std::defaultfloat << '\n';
    }
  }
}

void warn_unconverged(const SolveReport& report, std::ostream& err) {
  if (!report.converged) {
    err << "warning: solver did not converge after " << report.outer_iterations
        << " outer iterations (last F_max estimate " << format_real(report.final_f_est)
        << "); verdict is not certified\n";
  }
}

}  // namespace

SolveParams SolverFlags::to_params() const {
  SolveParams p;
  p.outer_tol = eps;
  p.oracle.inner_tol = delta;
  p.oracle.max_inner = tmax;
  p.oracle.restarts = restarts;
  p.max_outer = kmax;
  p.tau = tau;
  p.seed = seed;
  p.validate();
  return p;
}

DensityMatrix StateSource::resolve() const {
  if (state_file) {
    if (family) throw Error("give either a state file or --family, not both");
    return load_state_file(*state_file);
  }
  if (!family) throw Error("no input state: give a state file or --family with --p");
  if (!p) throw Error("--family requires --p");
  return make_state({parse_family_kind(*family), *p});
}

std::vector<double> make_grid(double p_min, double p_max, double p_step) {
  if (!(p_min >= 0.0 && p_min <= p_max && p_max <= 1.0)) throw Error("grid requires 0 <= p-min <= p-max <= 1");
  if (!(p_step > 0.0)) throw Error("grid requires p-step > 0");
  const auto count = static_cast<long>(std::floor((p_max - p_min) / p_step + 1e-9)) + 1;
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(count));
  for (long i = 0; i < count; ++i) {
    const double p = std::round((p_min + static_cast<double>(i) * p_step) * 1e12) / 1e12;
    grid.push_back(std::min(p, p_max));
  }
  return grid;
}

int cmd_scan(const ScanOptions& opts, std::ostream& out, std::ostream& err) {
  FamilyKind kind;
  std::vector<double> grid;
  SolveParams params;
  try {
    kind = parse_family_kind(opts.family);
    grid = make_grid(opts.p_min, opts.p_max, opts.p_step);
    params = opts.solver.to_params();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (opts.format != "csv" && opts.format != "json") {
    err << "error: unknown format '" << opts.format << "' (expected csv or json)\n";
    return kExitUsage;
  }

  const int d = family_local_dim(kind);
  const auto curve = distance_curve(kind, grid, params);
  std::vector<ScanRow> rows;
  bool all_converged = true;
  for (const auto& pt : curve) {
    if (pt.error) err << "warning: p = " << format_real(pt.p) << ": " << *pt.error << '\n';
    all_converged = all_converged && pt.converged && !pt.error;
    rows.push_back({pt.p, pt.distance, pt.f_est_at_rho, mef_to_avg_fidelity(pt.f_est_at_rho, d), pt.useful,
                    pt.converged, pt.outer_iterations});
  }

  const std::string text = opts.format == "csv" ? scan_to_csv(rows) : scan_to_json(rows);
  if (opts.out_path) {
    if (!write_file(*opts.out_path, text, err)) return kExitUsage;
  } else {
    out << text;
  }
  if (!all_converged) {
    err << "warning: some grid points did not converge\n";
    return kExitUnconverged;
  }
  return kExitUseful;
}

int cmd_check(const std::filesystem::path& state_file, const SolverFlags& solver, std::ostream& out,
              std::ostream& err) {
  try {
    const DensityMatrix rho = load_state_file(state_file);
    const SolveParams params = solver.to_params();
    const SolveReport report = solve(rho, params);
    const int d = rho.dim_a();
    const MefEstimate mef = estimate_mef(rho, params.oracle, solver.seed);
    out << "distance D(rho)      " << format_real(report.distance) << '\n'
        << "F_max estimate       " << format_real(mef.f_est) << '\n'
        << "average fidelity     " << format_real(mef_to_avg_fidelity(mef.f_est, d)) << '\n'
        << "classical bound      " << format_real(2.0 / (d + 1)) << '\n'
        << "outer iterations     " << report.outer_iterations << '\n'
        << "verdict              "
        << (report.useful ? "useful for quantum teleportation" : "no quantum advantage for teleportation") << '\n';
    warn_unconverged(report, err);
    if (!report.converged) return kExitUnconverged;
    return report.useful ? kExitUseful : kExitNotUseful;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

std::string witness_json(const DensityMatrix& rho, const SolveReport& report) {
  const WitnessOperator raw = construct_witness(rho, report.sigma_star);
  const WitnessOperator unit = normalize_witness(raw);
  const int d = rho.dim_a();
  const BasisDecomposition dec = decompose(unit, d);

  json coeffs = json::array();
  for (Eigen::Index i = 0; i < dec.coefficients.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < dec.coefficients.cols(); ++j) row.push_back(round_to(dec.coefficients(i, j), 6));
    coeffs.push_back(std::move(row));
  }
  json doc;
  doc["d"] = d;
  doc["distance"] = report.distance;
  doc["shift_c"] = raw.shift;
  doc["witness_raw"] = matrix_to_json(raw.w.matrix());
  doc["witness_normalized"] = matrix_to_json(unit.w.matrix());
  doc["decomposition"] = {{"basis", std::string(dec.basis_name())}, {"coefficients", std::move(coeffs)}};
  return doc.dump(2) + "\n";
}

int cmd_witness(const WitnessOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    const DensityMatrix rho = opts.source.resolve();
    const SolveReport report = solve(rho, opts.solver.to_params());
    warn_unconverged(report, err);
    if (!report.useful) {
      err << "no witness: state in S (D = " << format_real(report.distance) << ")\n";
      return kExitNotUseful;
    }
    const std::string doc = witness_json(rho, report);
    if (opts.out_path && !write_file(*opts.out_path, doc, err)) return kExitUsage;
    const WitnessOperator raw = construct_witness(rho, report.sigma_star);
    out << "distance D(rho)  " << format_real(report.distance) << '\n'
        << "shift c          " << format_real(raw.shift) << '\n'
        << "Tr(W rho)        " << format_real(evaluate(raw, rho)) << '\n';
    print_table(decompose(normalize_witness(raw), rho.dim_a()), out);
    if (!opts.out_path) out << doc;
    return report.converged ? kExitUseful : kExitUnconverged;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int cmd_mef(const StateSource& source, const SolverFlags& solver, std::ostream& out, std::ostream& err) {
  try {
    const DensityMatrix rho = source.resolve();
    const OracleParams params = solver.to_params().oracle;
    const MefEstimate est = estimate_mef(rho, params, solver.seed);
    const int d = rho.dim_a();
    out << "F_max estimate    " << std::fixed << std::setprecision(6) << est.f_est << std::defaultfloat << '\n'
        << "average fidelity  " << std::fixed << std::setprecision(6) << mef_to_avg_fidelity(est.f_est, d)
        << std::defaultfloat << '\n'
        << "threshold 1/d     " << std::fixed << std::setprecision(6) << 1.0 / d << std::defaultfloat << '\n'
        << "restart index     " << est.restart_index << (est.restart_index == 0 ? " (identity start)" : "") << '\n'
        << "iterations        " << est.iterations << '\n'
        << "U_opt (phase-normalized):\n";
    const ComplexMatrix& u = est.u_opt.matrix();
    for (Eigen::Index i = 0; i < u.rows(); ++i) {
      out << ' ';
      for (Eigen::Index j = 0; j < u.cols(); ++j) {
        out << "  " << std::showpos << std::fixed << std::setprecision(6) << round_to(u(i, j).real(), 6)
            << round_to(u(i, j).imag(), 6) << "i" << std::noshowpos;
      }
      out << std::defaultfloat << '\n';
    }
    return kExitUseful;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int cmd_crosscheck(const StateSource& source, const SolverFlags& solver, std::ostream& out, std::ostream& err) {
  try {
    const DensityMatrix rho = source.resolve();
    const TwoQubitCrosscheck cc = two_qubit_crosscheck(rho);
    const SolveReport report = solve(rho, solver.to_params());
    out << "correlation matrix T:\n";
    for (int i = 0; i < 3; ++i) {
      out << ' ';
      for (int j = 0; j < 3; ++j) out << "  " << std::setw(16) << format_real(round_to(cc.correlation(i, j), 12));
      out << '\n';
    }
    out << "N (sum of singular values)  " << format_real(cc.singular_value_sum) << '\n'
        << "F_avg = (1 + N/3)/2         " << format_real(cc.avg_fidelity) << '\n'
        << "analytic verdict            " << (cc.useful ? "useful" : "not useful") << " (F_avg > 2/3)\n"
        << "geometric distance D        " << format_real(report.distance) << '\n'
        << "geometric verdict           " << (report.useful ? "useful" : "not useful") << " (D > tau)\n"
        << "agreement                   " << (cc.useful == report.useful ? "yes" : "NO") << '\n';
    warn_unconverged(report, err);
    return kExitUseful;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace telwit::cli
