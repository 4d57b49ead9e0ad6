#pragma once

#include <optional>
#include <span>
#include <vector>

#include "qwsearch/lattice.hpp"
#include "qwsearch/oracle_ancilla.hpp"

namespace qwsearch {

struct SeriesPoint {
  int t2 = 0;
  double P = 0.0;
};

/// Window control for searches without an explicit t2_max.
///
/// The window is default_t2_max(kappa). Recording stops after the first
/// period of the oscillation: once the running maximum exceeds
/// decay_floor / N and P then drops below decay_fraction times that maximum.
/// If the maximum still sits on the window edge, the window grows by
/// regrow_factor once.
struct SearchOptions {
  double kappa = 2.0;
  double decay_fraction = 0.5;
  double decay_floor = 10.0;
  bool regrow = true;
  double regrow_factor = 1.5;
};

struct Peak {
  int t2 = 0;
  double P = 0.0;
  bool at_edge = false;
};

struct SearchResult {
  LatticeConfig config;
  WalkParams wparams;
  std::optional<double> delta;
  std::vector<SeriesPoint> series;
  /// Ancilla runs: overlap with |delta> (x) |marked> per iteration.
  std::vector<double> projected;
  int t2_peak = 0;
  double P_peak = 0.0;
  double complexity = 0.0;
  double P_log2N = 0.0;
  double t2_norm = 0.0;
  double cx_norm = 0.0;
  bool peak_at_edge = false;
  bool regrown = false;
};

/// Global maximum; first attaining index on ties. at_edge is set when that
/// index is the last one.
Peak find_peak(std::span<const SeriesPoint> series);

int default_t2_max(const LatticeConfig& config,
                   const std::optional<AncillaParams>& aparams = std::nullopt,
                   double kappa = 2.0);

/// cos(delta) = sqrt(coeff / ln N). Rejects coeff / ln N > 1.
AncillaParams cos_delta_rule(std::size_t N, double coeff);

/// Fixed window: t2 = 1..t2_max, no early stop.
SearchResult run_plain_search(const LatticeConfig& config, const WalkParams& wparams, int t2_max);
SearchResult run_plain_search(const LatticeConfig& config, const WalkParams& wparams,
                              const SearchOptions& options = {});

SearchResult run_tulsi_search(const LatticeConfig& config, const WalkParams& wparams,
                              const AncillaParams& aparams, int t2_max);
SearchResult run_tulsi_search(const LatticeConfig& config, const WalkParams& wparams,
                              const AncillaParams& aparams, const SearchOptions& options = {});

/// t2_peak / sqrt(P_peak).
double effective_complexity(const SearchResult& result);

struct ScanRow {
  double s = 0.0;
  int t1 = 0;
  double theta = 0.0;
  double P_peak = 0.0;
  int t2_peak = 0;
  double complexity = 0.0;
};

/// One automatic-window search per (s, t1) pair, rows in input order
/// (s outer, t1 inner). The config's mode selects plain or controlled search.
std::vector<ScanRow> scan_parameters(const LatticeConfig& config, std::span<const double> s_list,
                                     std::span<const int> t1_list,
                                     const std::optional<AncillaParams>& aparams = std::nullopt,
                                     const SearchOptions& options = {});

}  // namespace qwsearch
