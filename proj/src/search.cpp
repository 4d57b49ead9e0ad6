#include "qwsearch/search.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace qwsearch {

Peak find_peak(std::span<const SeriesPoint> series) {
  if (series.empty()) throw ValidationError("series must not be empty");
  std::size_t best = 0;
  for (std::size_t i = 1; i < series.size(); ++i)
    if (series[i].P > series[best].P) best = i;
  return {series[best].t2, series[best].P, best + 1 == series.size()};
}

int default_t2_max(const LatticeConfig& config, const std::optional<AncillaParams>& aparams,
                   double kappa) {
  if (!(kappa > 0.0)) throw ValidationError("kappa must be positive");
  const double N = static_cast<double>(config.N());
  double window = kappa * std::sqrt(N * std::log2(N));
  if (aparams) {
    if (!(aparams->cos_delta() > 0.0)) throw ValidationError("cos_delta must be positive");
    window /= aparams->cos_delta();
  }
  return static_cast<int>(std::ceil(window));
}

AncillaParams cos_delta_rule(std::size_t N, double coeff) {
  if (!(coeff > 0.0)) throw ValidationError("cosdelta_coeff must be positive");
  const double ratio = coeff / std::log(static_cast<double>(N));
  if (ratio > 1.0)
    throw ValidationError("cosdelta_coeff / ln N must not exceed 1 (got " + std::to_string(ratio) +
                          ")");
  return AncillaParams::from_cos_delta(std::sqrt(ratio));
}

namespace {

using Step = std::function<double()>;

struct Window {
  int t2_max;
  bool automatic;
  SearchOptions options;
};

void finish(SearchResult& result) {
  const Peak peak = find_peak(result.series);
  result.t2_peak = peak.t2;
  result.P_peak = peak.P;
  result.peak_at_edge = peak.at_edge;
  const double N = static_cast<double>(result.config.N());
  const double log2N = std::log2(N);
  result.complexity = peak.P > 0.0 ? peak.t2 / std::sqrt(peak.P) : INFINITY;
  result.P_log2N = peak.P * log2N;
  result.t2_norm = peak.t2 / std::sqrt(N * log2N);
  result.cx_norm = result.complexity / std::sqrt(N * log2N);
}

/// Runs the oracle-call recurrence; step() advances one iteration and returns P.
void drive(SearchResult& result, const Window& window, const Step& step) {
  if (window.t2_max < 1) throw ValidationError("t2_max must be at least 1");
  const double floor = window.options.decay_floor / static_cast<double>(result.config.N());
  int limit = window.t2_max;
  double running_max = -1.0;
  bool grown = false;
  for (int t2 = 1; t2 <= limit; ++t2) {
    const double P = step();
    result.series.push_back({t2, P});
    running_max = std::max(running_max, P);
    if (window.automatic && window.options.decay_fraction > 0.0 && running_max > floor &&
        P < window.options.decay_fraction * running_max)
      break;
    if (t2 == limit && window.automatic && window.options.regrow && !grown &&
        find_peak(result.series).at_edge) {
      limit = static_cast<int>(std::ceil(limit * window.options.regrow_factor));
      grown = true;
    }
  }
  result.regrown = grown;
  finish(result);
}

SearchResult plain_search(const LatticeConfig& config, const WalkParams& wparams,
                          const Window& window) {
  if (config.mode() != Mode::Plain) throw ValidationError("mode: plain search needs plain mode");
  SearchResult result{config, wparams, std::nullopt, {}, {}};
  StateVector state = uniform_state(config);
  const WalkOperator walk(wparams);
  drive(result, window, [&] {
    apply_oracle(state, config);
    apply_walk_power(state.amplitudes(), state.L(), walk);
    return marked_probability(state, config);
  });
  return result;
}

SearchResult tulsi_search(const LatticeConfig& config, const WalkParams& wparams,
                          const AncillaParams& aparams, const Window& window) {
  if (config.mode() != Mode::Ancilla)
    throw ValidationError("mode: controlled search needs ancilla mode");
  SearchResult result{config, wparams, aparams.delta(), {}, {}};
  StateVector state = uniform_state(config);
  const WalkOperator walk(wparams);
  drive(result, window, [&] {
    tulsi_iteration(state, config, walk, aparams);
    result.projected.push_back(projected_probability(state, config, aparams.delta()));
    return marked_probability(state, config);
  });
  return result;
}

}  // namespace

SearchResult run_plain_search(const LatticeConfig& config, const WalkParams& wparams, int t2_max) {
  return plain_search(config, wparams, {t2_max, false, {}});
}

SearchResult run_plain_search(const LatticeConfig& config, const WalkParams& wparams,
                              const SearchOptions& options) {
  return plain_search(config, wparams,
                      {default_t2_max(config, std::nullopt, options.kappa), true, options});
}

SearchResult run_tulsi_search(const LatticeConfig& config, const WalkParams& wparams,
                              const AncillaParams& aparams, int t2_max) {
  return tulsi_search(config, wparams, aparams, {t2_max, false, {}});
}

SearchResult run_tulsi_search(const LatticeConfig& config, const WalkParams& wparams,
                              const AncillaParams& aparams, const SearchOptions& options) {
  return tulsi_search(config, wparams, aparams,
                      {default_t2_max(config, aparams, options.kappa), true, options});
}

double effective_complexity(const SearchResult& result) {
  if (!(result.P_peak > 0.0)) throw ValidationError("P_peak must be positive");
  return result.t2_peak / std::sqrt(result.P_peak);
}

std::vector<ScanRow> scan_parameters(const LatticeConfig& config, std::span<const double> s_list,
                                     std::span<const int> t1_list,
                                     const std::optional<AncillaParams>& aparams,
                                     const SearchOptions& options) {
  if (s_list.empty() || t1_list.empty()) throw ValidationError("s and t1 lists must be non-empty");
  if (config.mode() == Mode::Ancilla && !aparams)
    throw ValidationError("delta: ancilla scan needs ancilla parameters");
  std::vector<ScanRow> rows;
  rows.reserve(s_list.size() * t1_list.size());
  for (double s : s_list) {
    for (int t1 : t1_list) {
      const WalkParams wp(s, t1);
      const SearchResult r = config.mode() == Mode::Plain
                                 ? run_plain_search(config, wp, options)
                                 : run_tulsi_search(config, wp, *aparams, options);
      rows.push_back({s, t1, wp.theta(), r.P_peak, r.t2_peak, r.complexity});
    }
  }
  return rows;
}

}  // namespace qwsearch
