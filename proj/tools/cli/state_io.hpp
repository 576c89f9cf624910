// File formats of the command-line tool.
//
// State file (JSON):
//   {"dimA": 2, "dimB": 2, "matrix": [[[re, im], ...], ...]}   row-major
// Scan output: CSV with the fixed header in kScanCsvHeader, or a JSON array
// of objects with the same keys.

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "telwit/telwit.hpp"

namespace telwit::cli {

inline constexpr std::string_view kScanCsvHeader =
    "p,distance,mef_estimate,avg_fidelity,useful,converged,outer_iterations";

struct ScanRow {
  double p;
  double distance;
  double mef_estimate;
  double avg_fidelity;
  bool useful;
  bool converged;
  int outer_iterations;
};

/// Raised for malformed input files; the message carries line/field context.
class ParseError : public Error {
 public:
  using Error::Error;
};

DensityMatrix parse_state(std::string_view text, std::string_view source = "<input>");
DensityMatrix load_state_file(const std::filesystem::path& path);
std::string format_state(const DensityMatrix& rho);

nlohmann::json matrix_to_json(const ComplexMatrix& m, int decimals = -1);

/// %.12g, the precision used for every real in scan output.
std::string format_real(double x);

std::string scan_to_csv(const std::vector<ScanRow>& rows);
std::string scan_to_json(const std::vector<ScanRow>& rows);
std::vector<ScanRow> parse_scan_csv(std::string_view text);

/// Rounds to `decimals` places and folds −0 to 0.
double round_to(double x, int decimals);

}  // namespace telwit::cli
