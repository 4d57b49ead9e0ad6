#include "qwsearch/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <tuple>

namespace qwsearch {

std::string format_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", value);
  return buf;
}

double canonical(double value) { return std::stod(format_number(value)); }

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream is(line);
  while (std::getline(is, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

std::string format_coeff(const std::optional<double>& coeff) {
  return coeff ? format_number(*coeff) : std::string{};
}

template <class F>
auto parse_field(const std::string& name, const std::string& text, F convert) {
  try {
    std::size_t used = 0;
    auto value = convert(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::logic_error&) {
    throw ValidationError(name + ": cannot parse '" + text + "'");
  }
}

double to_double(const std::string& name, const std::string& text) {
  return parse_field(name, text, [](const std::string& t, std::size_t* n) { return std::stod(t, n); });
}

int to_int(const std::string& name, const std::string& text) {
  return parse_field(name, text, [](const std::string& t, std::size_t* n) { return std::stoi(t, n); });
}

std::string trim_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

}  // namespace

DataRow make_data_row(const SearchResult& r, std::optional<double> cosdelta_coeff) {
  DataRow row;
  row.L = r.config.L();
  row.N = r.config.N();
  row.mode = r.config.mode();
  row.s = canonical(r.wparams.s());
  row.t1 = r.wparams.t1();
  if (cosdelta_coeff) row.cosdelta_coeff = canonical(*cosdelta_coeff);
  row.t2_peak = r.t2_peak;
  row.P_peak = canonical(r.P_peak);
  row.complexity = canonical(r.complexity);
  row.P_log2N = canonical(r.P_log2N);
  row.t2_norm = canonical(r.t2_norm);
  row.cx_norm = canonical(r.cx_norm);
  row.theta = canonical(r.wparams.theta());
  row.peak_at_edge = r.peak_at_edge;
  return row;
}

ScalingPoint to_scaling_point(const DataRow& row) {
  return make_scaling_point(row.L, row.P_peak, row.t2_peak, row.cosdelta_coeff);
}

std::string data_header() {
  return "L,N,mode,s,t1,cosdelta_coeff,t2_peak,P_peak,complexity,P_log2N,t2_norm,cx_norm,theta,"
         "peak_at_edge";
}

std::string format_data_row(const DataRow& row) {
  std::ostringstream os;
  os << row.L << ',' << row.N << ',' << to_string(row.mode) << ',' << format_number(row.s) << ','
     << row.t1 << ',' << format_coeff(row.cosdelta_coeff) << ',' << row.t2_peak << ','
     << format_number(row.P_peak) << ',' << format_number(row.complexity) << ','
     << format_number(row.P_log2N) << ',' << format_number(row.t2_norm) << ','
     << format_number(row.cx_norm) << ',' << format_number(row.theta) << ','
     << (row.peak_at_edge ? 1 : 0);
  return os.str();
}

DataRow parse_data_row(const std::string& line) {
  const auto f = split_csv(trim_cr(line));
  if (f.size() != 14)
    throw ValidationError("row: expected 14 data fields, got " + std::to_string(f.size()));
  DataRow row;
  row.L = to_int("L", f[0]);
  row.N = static_cast<std::size_t>(std::stoull(f[1]));
  row.mode = parse_mode(f[2]);
  row.s = to_double("s", f[3]);
  row.t1 = to_int("t1", f[4]);
  row.cosdelta_coeff = f[5].empty() ? std::nullopt
                                    : std::optional<double>(to_double("cosdelta_coeff", f[5]));
  row.t2_peak = to_int("t2_peak", f[6]);
  row.P_peak = to_double("P_peak", f[7]);
  row.complexity = to_double("complexity", f[8]);
  row.P_log2N = to_double("P_log2N", f[9]);
  row.t2_norm = to_double("t2_norm", f[10]);
  row.cx_norm = to_double("cx_norm", f[11]);
  row.theta = to_double("theta", f[12]);
  row.peak_at_edge = to_int("peak_at_edge", f[13]) != 0;
  if (row.N != static_cast<std::size_t>(row.L) * static_cast<std::size_t>(row.L))
    throw ValidationError("N must equal L^2");
  return row;
}

nlohmann::json to_json(const DataRow& row) {
  nlohmann::json j = {{"L", row.L},
                      {"N", row.N},
                      {"mode", to_string(row.mode)},
                      {"s", row.s},
                      {"t1", row.t1},
                      {"cosdelta_coeff", nullptr},
                      {"t2_peak", row.t2_peak},
                      {"P_peak", row.P_peak},
                      {"complexity", row.complexity},
                      {"P_log2N", row.P_log2N},
                      {"t2_norm", row.t2_norm},
                      {"cx_norm", row.cx_norm},
                      {"theta", row.theta},
                      {"peak_at_edge", row.peak_at_edge}};
  if (row.cosdelta_coeff) j["cosdelta_coeff"] = *row.cosdelta_coeff;
  return j;
}

std::string fit_header() { return "form,cosdelta_coeff,Lmin,Lmax,a,b,rms"; }

std::string format_fit_row(const FitResult& fit) {
  std::ostringstream os;
  os << to_string(fit.form) << ',' << format_coeff(fit.cosdelta_coeff) << ',' << fit.L_min << ','
     << fit.L_max << ',' << format_number(fit.a) << ',' << format_number(fit.b) << ','
     << format_number(fit.rms);
  return os.str();
}

FitResult parse_fit_row(const std::string& line) {
  const auto f = split_csv(trim_cr(line));
  if (f.size() != 7)
    throw ValidationError("row: expected 7 fit fields, got " + std::to_string(f.size()));
  FitResult fit;
  fit.form = parse_fit_form(f[0]);
  fit.cosdelta_coeff = f[1].empty()
                           ? std::nullopt
                           : std::optional<double>(to_double("cosdelta_coeff", f[1]));
  fit.L_min = to_int("Lmin", f[2]);
  fit.L_max = to_int("Lmax", f[3]);
  fit.a = to_double("a", f[4]);
  fit.b = to_double("b", f[5]);
  fit.rms = to_double("rms", f[6]);
  return fit;
}

nlohmann::json to_json(const FitResult& fit) {
  nlohmann::json j = {{"form", to_string(fit.form)}, {"cosdelta_coeff", nullptr},
                      {"Lmin", fit.L_min},            {"Lmax", fit.L_max},
                      {"a", fit.a},                   {"b", fit.b},
                      {"rms", fit.rms}};
  if (fit.cosdelta_coeff) j["cosdelta_coeff"] = *fit.cosdelta_coeff;
  return j;
}

ScalingTable build_scaling_table(std::vector<DataRow> rows) {
  ScalingTable table;
  // nullopt sorts before any coefficient, so plain rows lead at each L.
  std::stable_sort(rows.begin(), rows.end(), [](const DataRow& u, const DataRow& v) {
    return std::tie(u.L, u.cosdelta_coeff) < std::tie(v.L, v.cosdelta_coeff);
  });

  std::map<std::optional<double>, std::vector<ScalingPoint>> groups;
  for (const auto& row : rows) {
    if ((row.mode == Mode::Ancilla) != row.cosdelta_coeff.has_value())
      throw ValidationError("cosdelta_coeff: ancilla rows need a coefficient, plain rows none");
    groups[row.cosdelta_coeff].push_back(to_scaling_point(row));
  }

  for (const auto& [coeff, points] : groups) {
    std::vector<int> sizes;
    for (const auto& p : points) sizes.push_back(p.L);
    std::sort(sizes.begin(), sizes.end());
    const auto distinct = std::unique(sizes.begin(), sizes.end()) - sizes.begin();
    const std::string label = coeff ? "cosdelta_coeff=" + format_number(*coeff) : "plain";
    if (distinct < 2) {
      table.warnings.push_back("fit skipped for " + label + ": need at least two lattice sizes");
      continue;
    }
    const std::vector<FitForm> forms =
        coeff ? std::vector<FitForm>{FitForm::P_Ancilla, FitForm::T2, FitForm::Complexity}
              : std::vector<FitForm>{FitForm::P_NoAncilla, FitForm::T2};
    for (FitForm form : forms) table.fits.push_back(fit_scaling(form, points));
  }
  table.rows = std::move(rows);
  return table;
}

std::string format_scaling_table(const ScalingTable& table) {
  std::ostringstream os;
  os << data_header() << '\n';
  for (const auto& row : table.rows) os << format_data_row(row) << '\n';
  if (!table.fits.empty()) {
    os << '\n' << fit_header() << '\n';
    for (const auto& fit : table.fits) os << format_fit_row(fit) << '\n';
  }
  return os.str();
}

nlohmann::json to_json(const ScalingTable& table) {
  nlohmann::json j = {{"rows", nlohmann::json::array()}, {"fits", nlohmann::json::array()}};
  for (const auto& row : table.rows) j["rows"].push_back(to_json(row));
  for (const auto& fit : table.fits) j["fits"].push_back(to_json(fit));
  return j;
}

std::vector<DataRow> read_data_rows(std::istream& in) {
  std::vector<DataRow> rows;
  std::string line;
  bool in_data = false;
  while (std::getline(in, line)) {
    line = trim_cr(line);
    if (line.empty()) {
      in_data = false;
      continue;
    }
    if (line == data_header()) {
      in_data = true;
      continue;
    }
    if (line == fit_header()) {
      in_data = false;
      continue;
    }
    if (in_data) rows.push_back(parse_data_row(line));
  }
  return rows;
}

std::vector<std::filesystem::path> write_plot_files(const ScalingTable& table,
                                                    const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  struct Series {
    std::string header;
    std::vector<std::pair<double, double>> xy;
  };
  std::map<std::string, Series> files;
  for (const auto& row : table.rows) {
    const double log2N = std::log2(static_cast<double>(row.N));
    if (!row.cosdelta_coeff) {
      files["fig2_plain.dat"].header = "# log2N P_log2N";
      files["fig2_plain.dat"].xy.emplace_back(log2N, row.P_log2N);
      files["fig4_plain.dat"].header = "# L t2_norm";
      files["fig4_plain.dat"].xy.emplace_back(row.L, row.t2_norm);
      continue;
    }
    const std::string tag = "_coeff" + format_number(*row.cosdelta_coeff) + ".dat";
    files["fig3" + tag].header = "# L P_peak";
    files["fig3" + tag].xy.emplace_back(row.L, row.P_peak);
    files["fig4" + tag].header = "# L t2_norm";
    files["fig4" + tag].xy.emplace_back(row.L, row.t2_norm);
    files["fig5" + tag].header = "# L cx_norm";
    files["fig5" + tag].xy.emplace_back(row.L, row.cx_norm);
  }
  std::vector<std::filesystem::path> written;
  for (const auto& [name, series] : files) {
    const auto path = dir / name;
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << series.header << '\n';
    for (const auto& [x, y] : series.xy) out << format_number(x) << ' ' << format_number(y) << '\n';
    written.push_back(path);
  }
  return written;
}

}  // namespace qwsearch
