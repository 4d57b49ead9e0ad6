// qwsearch: run searches, parameter scans, scaling sweeps, fits and the
// dense-reference verification suite.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid input,
// 3 probability peak still on the window edge after regrowth.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qwsearch/report.hpp"
#include "qwsearch/search.hpp"
#include "qwsearch/verify.hpp"

namespace {

using namespace qwsearch;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitPeakAtEdge = 3;

struct Settings {
  int L = 64;
  std::vector<int> L_list;
  double s = 1.0 / std::sqrt(2.0);
  int t1 = 3;
  std::string mode = "plain";
  std::optional<double> cosdelta_coeff;
  std::vector<double> cosdelta_coeff_list;
  double kappa = 2.0;
  std::vector<int> marked{0, 0};
  std::vector<double> s_list;
  std::vector<int> t1_list;
  std::string format = "csv";
  std::string output;
  std::string input = "-";
  std::string series_path;
  std::string plot_dir;
  bool inject_convention_flip = false;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

LatticeConfig config_for(const Settings& st, int L) {
  if (st.marked.size() != 2) throw ValidationError("marked needs two coordinates");
  return new_config(L, {st.marked[0], st.marked[1]}, parse_mode(st.mode));
}

SearchResult run_one(const Settings& st, int L, std::optional<double> coeff) {
  const LatticeConfig config = config_for(st, L);
  const WalkParams wparams(st.s, st.t1);
  SearchOptions opts;
  opts.kappa = st.kappa;
  if (config.mode() == Mode::Plain) {
    if (coeff) throw ValidationError("cosdelta-coeff only applies to ancilla mode");
    return run_plain_search(config, wparams, opts);
  }
  if (!coeff) throw ValidationError("cosdelta-coeff is required in ancilla mode");
  return run_tulsi_search(config, wparams, cos_delta_rule(config.N(), *coeff), opts);
}

void check_format(const Settings& st) {
  if (st.format != "csv" && st.format != "json")
    throw ValidationError("format must be 'csv' or 'json'");
}

int cmd_search(const Settings& st) {
  check_format(st);
  const SearchResult result = run_one(st, st.L, st.cosdelta_coeff);
  const DataRow row = make_data_row(result, st.cosdelta_coeff);
  Output out(st.output);
  if (st.format == "json")
    out.stream() << to_json(row).dump(2) << '\n';
  else
    out.stream() << data_header() << '\n' << format_data_row(row) << '\n';

  if (!st.series_path.empty()) {
    std::ofstream series(st.series_path);
    if (!series) throw std::runtime_error("cannot open series file " + st.series_path);
    series << "# t2 P\n";
    for (const auto& p : result.series) series << p.t2 << ' ' << format_number(p.P) << '\n';
  }
  if (result.peak_at_edge) {
    std::cerr << "warning: peak probability sits on the window edge (t2=" << result.t2_peak
              << ")\n";
    return kExitPeakAtEdge;
  }
  return 0;
}

int cmd_scan(const Settings& st) {
  check_format(st);
  const LatticeConfig config = config_for(st, st.L);
  std::optional<AncillaParams> aparams;
  if (config.mode() == Mode::Ancilla) {
    if (!st.cosdelta_coeff) throw ValidationError("cosdelta-coeff is required in ancilla mode");
    aparams = cos_delta_rule(config.N(), *st.cosdelta_coeff);
  }
  const std::vector<double> s_list = st.s_list.empty() ? std::vector<double>{st.s} : st.s_list;
  const std::vector<int> t1_list = st.t1_list.empty() ? std::vector<int>{st.t1} : st.t1_list;
  SearchOptions opts;
  opts.kappa = st.kappa;
  const auto rows = scan_parameters(config, s_list, t1_list, aparams, opts);

  Output out(st.output);
  if (st.format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : rows)
      j.push_back({{"s", r.s}, {"t1", r.t1}, {"theta", r.theta}, {"P_peak", r.P_peak},
                   {"t2_peak", r.t2_peak}, {"complexity", r.complexity}});
    out.stream() << j.dump(2) << '\n';
    return 0;
  }
  out.stream() << "s,t1,theta,P_peak,t2_peak,complexity\n";
  for (const auto& r : rows)
    out.stream() << format_number(r.s) << ',' << r.t1 << ',' << format_number(r.theta) << ','
                 << format_number(r.P_peak) << ',' << r.t2_peak << ','
                 << format_number(r.complexity) << '\n';
  return 0;
}

int emit_table(const Settings& st, const ScalingTable& table) {
  for (const auto& w : table.warnings) std::cerr << "warning: " << w << '\n';
  Output out(st.output);
  if (st.format == "json")
    out.stream() << to_json(table).dump(2) << '\n';
  else
    out.stream() << format_scaling_table(table);
  if (!st.plot_dir.empty()) write_plot_files(table, st.plot_dir);
  return 0;
}

int cmd_scaling(const Settings& st) {
  check_format(st);
  if (st.L_list.empty()) throw ValidationError("L-list must not be empty");
  const Mode mode = parse_mode(st.mode);
  std::vector<std::optional<double>> coeffs;
  if (mode == Mode::Plain) {
    coeffs.push_back(std::nullopt);
  } else {
    for (double c : st.cosdelta_coeff_list) coeffs.emplace_back(c);
    if (coeffs.empty() && st.cosdelta_coeff) coeffs.push_back(st.cosdelta_coeff);
    if (coeffs.empty()) throw ValidationError("cosdelta-coeff-list is required in ancilla mode");
  }
  // Validate every (L, coeff) pair before spending time on searches.
  for (int L : st.L_list) {
    const auto config = config_for(st, L);
    for (const auto& c : coeffs)
      if (c) cos_delta_rule(config.N(), *c);
  }

  std::vector<DataRow> rows;
  bool edge = false;
  for (int L : st.L_list)
    for (const auto& c : coeffs) {
      const SearchResult r = run_one(st, L, c);
      edge = edge || r.peak_at_edge;
      rows.push_back(make_data_row(r, c));
    }
  emit_table(st, build_scaling_table(std::move(rows)));
  return edge ? kExitPeakAtEdge : 0;
}

int cmd_fit(const Settings& st) {
  check_format(st);
  std::vector<DataRow> rows;
  if (st.input == "-") {
    rows = read_data_rows(std::cin);
  } else {
    std::ifstream in(st.input);
    if (!in) throw ValidationError("input: cannot open " + st.input);
    rows = read_data_rows(in);
  }
  if (rows.empty()) throw ValidationError("input: no data rows found");
  return emit_table(st, build_scaling_table(std::move(rows)));
}

int cmd_verify(const Settings& st) {
  VerifyOptions opts;
  opts.inject_convention_flip = st.inject_convention_flip;
  bool all = true;
  Output out(st.output);
  for (const auto& c : run_verification(opts)) {
    char line[256];
    std::snprintf(line, sizeof line, "%s  %-55s max_dev=%.3e  tol=%.0e", c.pass ? "PASS" : "FAIL",
                  c.name.c_str(), c.max_deviation, c.tolerance);
    out.stream() << line << '\n';
    all = all && c.pass;
  }
  return all ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum spatial search on a periodic square lattice"};
  app.set_config("--config", "", "TOML/INI file using the option names as keys; flags win");
  app.require_subcommand(1);

  Settings st;
  app.add_option("--L", st.L, "lattice extent (even, >= 4)")->capture_default_str();
  app.add_option("--L-list", st.L_list, "lattice extents for scaling")->delimiter(',');
  app.add_option("--s", st.s, "kinetic sine parameter in (0,1)")->capture_default_str();
  app.add_option("--t1", st.t1, "walk steps per oracle call")->capture_default_str();
  app.add_option("--mode", st.mode, "plain or ancilla")->capture_default_str();
  app.add_option("--cosdelta-coeff", st.cosdelta_coeff, "cos(delta) = sqrt(coeff / ln N)");
  app.add_option("--cosdelta-coeff-list", st.cosdelta_coeff_list, "coefficients for scaling")
      ->delimiter(',');
  app.add_option("--kappa", st.kappa, "window factor")->capture_default_str();
  app.add_option("--marked", st.marked, "marked vertex x1,x2")->delimiter(',')->expected(2);
  app.add_option("--s-list", st.s_list, "s values for scan")->delimiter(',');
  app.add_option("--t1-list", st.t1_list, "t1 values for scan")->delimiter(',');
  app.add_option("--format", st.format, "csv or json")->capture_default_str();
  app.add_option("--output", st.output, "output file (default stdout)");

  auto* search = app.add_subcommand("search", "run one search and print its record");
  search->add_option("--series", st.series_path, "write the P(t2) series to this file");
  auto* scan = app.add_subcommand("scan", "scan (s, t1) pairs at fixed L");
  auto* scaling = app.add_subcommand("scaling", "one search per L (and coeff), plus fits");
  scaling->add_option("--plot-dir", st.plot_dir, "write per-figure two-column data files here");
  auto* fit = app.add_subcommand("fit", "refit data rows from a scaling CSV");
  fit->add_option("--input", st.input, "scaling CSV ('-' for stdin)")->capture_default_str();
  fit->add_option("--plot-dir", st.plot_dir, "write per-figure two-column data files here");
  auto* verify = app.add_subcommand("verify", "dense-reference and invariant checks");
  verify->add_flag("--inject-convention-flip", st.inject_convention_flip,
                   "test hook: run the kernel with the transposed even block");
  for (auto* sub : {search, scan, scaling, fit, verify}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInvalid;
  }

  try {
    if (*search) return cmd_search(st);
    if (*scan) return cmd_scan(st);
    if (*scaling) return cmd_scaling(st);
    if (*fit) return cmd_fit(st);
    if (*verify) return cmd_verify(st);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return 0;
}
