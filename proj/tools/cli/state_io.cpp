#include "cli/state_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace telwit::cli {

namespace {

using nlohmann::json;

std::string line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

int read_dim(const json& doc, const char* key, std::string_view source) {
  const auto it = doc.find(key);
  if (it == doc.end()) throw ParseError(std::string(source) + ": missing field '" + key + "'");
  if (!it->is_number_integer() || it->get<long long>() < 1) {
    throw ParseError(std::string(source) + ": field '" + key + "' must be a positive integer");
  }
  return it->get<int>();
}

double read_real(const json& v, const std::string& field, std::string_view source) {
  if (!v.is_number()) throw ParseError(std::string(source) + ": field '" + field + "' must be a number");
  return v.get<double>();
}

}  // namespace

DensityMatrix parse_state(std::string_view text, std::string_view source) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string(source) + ": invalid JSON at " + line_col(text, e.byte == 0 ? 0 : e.byte - 1) +
                     ": " + e.what());
  }
  if (!doc.is_object()) throw ParseError(std::string(source) + ": top level must be an object");
  const int dim_a = read_dim(doc, "dimA", source);
  const int dim_b = read_dim(doc, "dimB", source);
  const auto n = static_cast<std::size_t>(dim_a) * static_cast<std::size_t>(dim_b);

  const auto it = doc.find("matrix");
  if (it == doc.end()) throw ParseError(std::string(source) + ": missing field 'matrix'");
  const json& rows = *it;
  if (!rows.is_array() || rows.size() != n) {
    throw ParseError(std::string(source) + ": field 'matrix' must be an array of " + std::to_string(n) + " rows");
  }
  ComplexMatrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const std::string row_field = "matrix[" + std::to_string(i) + "]";
    if (!rows[i].is_array() || rows[i].size() != n) {
      throw ParseError(std::string(source) + ": field '" + row_field + "' must hold " + std::to_string(n) + " entries");
    }
    for (std::size_t j = 0; j < n; ++j) {
      const std::string field = row_field + "[" + std::to_string(j) + "]";
      const json& entry = rows[i][j];
      if (!entry.is_array() || entry.size() != 2) {
        throw ParseError(std::string(source) + ": field '" + field + "' must be a [re, im] pair");
      }
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          Complex(read_real(entry[0], field + "[0]", source), read_real(entry[1], field + "[1]", source));
    }
  }
  try {
    return DensityMatrix(dim_a, dim_b, m);
  } catch (const Error& e) {
    throw ParseError(std::string(source) + ": " + e.what());
  }
}

DensityMatrix load_state_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open state file '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_state(buffer.str(), path.string());
}

nlohmann::json matrix_to_json(const ComplexMatrix& m, int decimals) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      double re = m(i, j).real();
      double im = m(i, j).imag();
      if (decimals >= 0) {
        re = round_to(re, decimals);
        im = round_to(im, decimals);
      }
      row.push_back(json::array({re, im}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string format_state(const DensityMatrix& rho) {
  json doc;
  doc["dimA"] = rho.dim_a();
  doc["dimB"] = rho.dim_b();
  doc["matrix"] = matrix_to_json(rho.matrix());
  return doc.dump(1) + "\n";
}

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x == 0.0 ? 0.0 : x);
  return buf;
}

double round_to(double x, int decimals) {
  const double scale = std::pow(10.0, decimals);
  const double r = std::round(x * scale) / scale;
  return r == 0.0 ? 0.0 : r;
}

std::string scan_to_csv(const std::vector<ScanRow>& rows) {
  std::string out(kScanCsvHeader);
  out += '\n';
  for (const auto& r : rows) {
    out += format_real(r.p) + ',' + format_real(r.distance) + ',' + format_real(r.mef_estimate) + ',' +
           format_real(r.avg_fidelity) + ',' + (r.useful ? "true" : "false") + ',' +
           (r.converged ? "true" : "false") + ',' + std::to_string(r.outer_iterations) + '\n';
  }
  return out;
}

std::string scan_to_json(const std::vector<ScanRow>& rows) {
  // Reals go through the same 12-digit text form as the CSV output.
  const auto real = [](double x) { return std::stod(format_real(x)); };
  json arr = json::array();
  for (const auto& r : rows) {
    json row;
    row["p"] = real(r.p);
    row["distance"] = real(r.distance);
    row["mef_estimate"] = real(r.mef_estimate);
    row["avg_fidelity"] = real(r.avg_fidelity);
    row["useful"] = r.useful;
    row["converged"] = r.converged;
    row["outer_iterations"] = r.outer_iterations;
    arr.push_back(std::move(row));
  }
  return arr.dump(2) + "\n";
}

std::vector<ScanRow> parse_scan_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != kScanCsvHeader) throw ParseError("scan csv: unexpected header");
  const auto parse_bool = [](const std::string& s) {
    if (s == "true") return true;
    if (s == "false") return false;
    throw ParseError("scan csv: bad boolean '" + s + "'");
  };
  std::vector<ScanRow> rows;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (cells.size() != 7) throw ParseError("scan csv: line " + std::to_string(line_no) + " has wrong field count");
    try {
      rows.push_back({std::stod(cells[0]), std::stod(cells[1]), std::stod(cells[2]), std::stod(cells[3]),
                      parse_bool(cells[4]), parse_bool(cells[5]), std::stoi(cells[6])});
    } catch (const std::logic_error&) {
      throw ParseError("scan csv: line " + std::to_string(line_no) + " is malformed");
    }
  }
  return rows;
}

}  // namespace telwit::cli
