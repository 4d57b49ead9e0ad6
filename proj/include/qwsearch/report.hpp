#pragma once

// CSV / JSON records for search results and scaling fits.
//
// Data rows:
//   L,N,mode,s,t1,cosdelta_coeff,t2_peak,P_peak,complexity,P_log2N,t2_norm,cx_norm,theta,peak_at_edge
// Fit rows:
//   form,cosdelta_coeff,Lmin,Lmax,a,b,rms
// Reals use 10 significant digits. Records store values already rounded to
// that precision, so anything computed from a record (fits in particular)
// is the same whether it comes from memory or from a parsed file.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "qwsearch/scaling.hpp"
#include "qwsearch/search.hpp"

namespace qwsearch {

std::string format_number(double value);
/// Value as it reads back after format_number.
double canonical(double value);

struct DataRow {
  int L = 0;
  std::size_t N = 0;
  Mode mode = Mode::Plain;
  double s = 0.0;
  int t1 = 0;
  std::optional<double> cosdelta_coeff;
  int t2_peak = 0;
  double P_peak = 0.0;
  double complexity = 0.0;
  double P_log2N = 0.0;
  double t2_norm = 0.0;
  double cx_norm = 0.0;
  double theta = 0.0;
  bool peak_at_edge = false;

  friend bool operator==(const DataRow&, const DataRow&) = default;
};

DataRow make_data_row(const SearchResult& result, std::optional<double> cosdelta_coeff);
ScalingPoint to_scaling_point(const DataRow& row);

std::string data_header();
std::string format_data_row(const DataRow& row);
DataRow parse_data_row(const std::string& line);
nlohmann::json to_json(const DataRow& row);

std::string fit_header();
std::string format_fit_row(const FitResult& fit);
FitResult parse_fit_row(const std::string& line);
nlohmann::json to_json(const FitResult& fit);

/// Data rows sorted by (mode, coeff, L) plus the fits for each group:
/// plain -> P_NoAncilla, T2; ancilla -> P_Ancilla, T2, Complexity.
struct ScalingTable {
  std::vector<DataRow> rows;
  std::vector<FitResult> fits;
  /// Groups that could not be fitted (fewer than two lattice sizes).
  std::vector<std::string> warnings;
};

ScalingTable build_scaling_table(std::vector<DataRow> rows);
std::string format_scaling_table(const ScalingTable& table);
nlohmann::json to_json(const ScalingTable& table);
/// Reads the data section of a scaling CSV; fit rows and blank lines are skipped.
std::vector<DataRow> read_data_rows(std::istream& in);

/// Two-column plot files, one per figure axis pair and delta rule.
/// Returns the paths written.
std::vector<std::filesystem::path> write_plot_files(const ScalingTable& table,
                                                    const std::filesystem::path& dir);

}  // namespace qwsearch
