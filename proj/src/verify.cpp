#include "qwsearch/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qwsearch/dense_reference.hpp"
#include "qwsearch/dirac_walk.hpp"
#include "qwsearch/oracle_ancilla.hpp"
#include "qwsearch/search.hpp"

namespace qwsearch {

StateVector random_state(const LatticeConfig& config, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  StateVector state = zero_state(config);
  for (double& amp : state.amplitudes()) amp = gauss(rng);
  const double n = norm(state);
  for (double& amp : state.amplitudes()) amp /= n;
  return state;
}

StateVector translated(const StateVector& state, int d1, int d2) {
  StateVector out(state.mode(), state.L());
  const int L = state.L();
  const int sectors = state.mode() == Mode::Ancilla ? 2 : 1;
  for (int a = 0; a < sectors; ++a) {
    const auto src = state.sector(a);
    auto dst = out.sector(a);
    for (int x2 = 0; x2 < L; ++x2)
      for (int x1 = 0; x1 < L; ++x1) {
        const int y1 = ((x1 + d1) % L + L) % L;
        const int y2 = ((x2 + d2) % L + L) % L;
        dst[static_cast<std::size_t>(y2) * L + y1] = src[static_cast<std::size_t>(x2) * L + x1];
      }
  }
  return out;
}

namespace {

constexpr double kS = std::numbers::sqrt2 / 2;

CheckResult check(std::string name, double deviation, double tolerance) {
  return {std::move(name), deviation, tolerance, deviation < tolerance};
}

double max_series_diff(const SearchResult& sparse, const std::vector<double>& dense) {
  if (sparse.series.size() != dense.size()) return INFINITY;
  double d = 0.0;
  for (std::size_t i = 0; i < dense.size(); ++i)
    d = std::max(d, std::abs(sparse.series[i].P - dense[i]));
  return d;
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  const EvenFrame frame =
      options.inject_convention_flip ? EvenFrame::Transposed : EvenFrame::Reflected;
  const WalkParams wp1(kS, 1, frame);
  const WalkParams wp3(kS, 3, frame);
  std::mt19937_64 rng(20240611);
  std::vector<CheckResult> results;

  {
    double dev = 0.0;
    for (int L : {4, 6, 8}) {
      const auto cfg = new_config(L);
      const auto dense_w = dense::dense_walk_matrix(cfg, wp1);
      for (int trial = 0; trial < 20; ++trial) {
        StateVector psi = random_state(cfg, rng);
        const Eigen::VectorXcd expected = dense_w.m * dense::to_dense(psi);
        apply_walk(psi, wp1);
        dev = std::max(dev, (dense::to_dense(psi) - expected).cwiseAbs().maxCoeff());
      }
    }
    results.push_back(check("sparse walk vs dense, L=4,6,8, 20 random states", dev, 1e-12));
  }

  {
    const auto cfg = new_config(4);
    const auto sparse = run_plain_search(cfg, wp1, 40);
    const auto dense = dense::dense_search(cfg, wp1, std::nullopt, 40);
    results.push_back(check("plain search series vs dense, L=4, 40 steps",
                            max_series_diff(sparse, dense), 1e-12));
  }

  {
    const auto cfg = new_config(4, {0, 0}, Mode::Ancilla);
    const AncillaParams ap(0.7);
    const auto sparse = run_tulsi_search(cfg, wp3, ap, 40);
    const auto dense = dense::dense_search(cfg, wp3, ap, 40);
    results.push_back(check("controlled search series vs dense, L=4, 40 steps",
                            max_series_diff(sparse, dense), 1e-12));
  }

  {
    const auto cfg = new_config(4);
    const auto w = dense::dense_walk_matrix(cfg, wp1);
    results.push_back(check("dense walk unitarity, L=4", dense::unitarity_check(w), 1e-12));
    Eigen::VectorXcd psi = dense::to_dense(random_state(cfg, rng));
    double imag = 0.0;
    for (int t = 0; t < 100; ++t) {
      psi = w.m * psi;
      imag = std::max(imag, psi.imag().cwiseAbs().maxCoeff());
    }
    results.push_back(check("dense evolution stays real, 100 steps", imag, 1e-13));
  }

  {
    const auto cfg = new_config(8, {0, 0}, Mode::Ancilla);
    double dev = 0.0;
    for (double delta : {0.3, 1.0, 1.4}) {
      StateVector psi = uniform_state(cfg);
      const WalkOperator walk(wp3);
      const AncillaParams ap(delta);
      const std::size_t marked = site_index(cfg.with_mode(Mode::Plain), 0, 0);
      for (int it = 0; it < 50; ++it) {
        tulsi_iteration(psi, cfg, walk, ap);
        const auto zero = psi.sector(0);
        for (std::size_t i = 0; i < zero.size(); ++i)
          if (i != marked) dev = std::max(dev, std::abs(zero[i]));
      }
    }
    results.push_back(check("zero sector stays empty off the marked site, L=8", dev, 1e-12));
  }

  {
    const auto plain = run_plain_search(new_config(8), wp3, 100);
    const auto ctrl = run_tulsi_search(new_config(8, {0, 0}, Mode::Ancilla), wp3,
                                       AncillaParams(0.0), 100);
    double dev = 0.0;
    for (std::size_t i = 0; i < plain.series.size(); ++i)
      dev = std::max(dev, std::abs(plain.series[i].P - ctrl.series[i].P));
    results.push_back(check("delta=0 reduces to plain search, L=8", dev, 1e-10));
  }

  {
    const auto cfg = new_config(16, {0, 0}, Mode::Ancilla);
    StateVector psi = random_state(cfg, rng);
    const WalkOperator walk(wp3);
    const AncillaParams ap(1.0);
    for (int it = 0; it < 1000; ++it) tulsi_iteration(psi, cfg, walk, ap);
    results.push_back(check("norm drift, 1000 controlled iterations, L=16",
                            std::abs(norm(psi) - 1.0), 1e-10));
  }

  {
    const auto cfg = new_config(8);
    double dev = 0.0;
    for (auto [d1, d2] : {std::pair{2, 0}, std::pair{0, 2}, std::pair{2, 4}}) {
      StateVector psi = random_state(cfg, rng);
      StateVector moved = translated(psi, d1, d2);
      apply_walk(psi, wp1);
      apply_walk(moved, wp1);
      const StateVector expect = translated(psi, d1, d2);
      for (std::size_t i = 0; i < moved.size(); ++i)
        dev = std::max(dev, std::abs(moved[i] - expect[i]));
    }
    results.push_back(check("even-translation covariance, L=8", dev, 1e-13));
  }

  return results;
}

}  // namespace qwsearch
