#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "qwsearch/dense_reference.hpp"
#include "qwsearch/oracle_ancilla.hpp"
#include "qwsearch/verify.hpp"

using namespace qwsearch;

namespace {

constexpr double kS = std::numbers::sqrt2 / 2;

double max_abs_diff(const StateVector& u, const StateVector& v) {
  double d = 0;
  for (std::size_t i = 0; i < u.size(); ++i) d = std::max(d, std::abs(u[i] - v[i]));
  return d;
}

double max_zero_sector_off_marked(const StateVector& psi, const LatticeConfig& cfg) {
  const std::size_t marked = site_index(cfg.with_mode(Mode::Plain), cfg.marked().x1,
                                        cfg.marked().x2);
  const auto zero = psi.sector(0);
  double d = 0;
  for (std::size_t i = 0; i < zero.size(); ++i)
    if (i != marked) d = std::max(d, std::abs(zero[i]));
  return d;
}

}  // namespace

TEST_SUITE("oracle_ancilla") {

TEST_CASE("ancilla parameters") {
  const AncillaParams z(0.0);
  CHECK(z.cos_delta() == 1.0);
  CHECK(z.sin_delta() == 0.0);
  const AncillaParams q(std::numbers::pi / 2);
  CHECK(q.cos_delta() == 0.0);
  CHECK(q.sin_delta() == 1.0);
  const auto f = AncillaParams::from_cos_delta(0.6);
  CHECK(f.cos_delta() == 0.6);
  CHECK(f.sin_delta() == doctest::Approx(0.8).scale(0).epsilon(1e-15));
  CHECK(f.delta() == doctest::Approx(std::acos(0.6)));
  CHECK_THROWS_AS(AncillaParams(-0.1), ValidationError);
  CHECK_THROWS_AS(AncillaParams(1.6), ValidationError);
  CHECK_THROWS_AS(AncillaParams::from_cos_delta(1.2), ValidationError);
}

TEST_CASE("oracle flips only the marked amplitude") {
  const auto cfg = new_config(4, {1, 2});
  StateVector psi = uniform_state(cfg);
  apply_oracle(psi, cfg);
  for (std::size_t i = 0; i < psi.size(); ++i)
    CHECK(psi[i] == (i == site_index(cfg, 1, 2) ? -0.25 : 0.25));
  apply_oracle(psi, cfg);
  CHECK(psi == uniform_state(cfg));
  StateVector anc = uniform_state(cfg.with_mode(Mode::Ancilla));
  CHECK_THROWS_AS(apply_oracle(anc, cfg), ValidationError);
}

TEST_CASE("X_delta rotates the ancilla pair") {
  const auto cfg = new_config(4, {0, 0}, Mode::Ancilla);
  const AncillaParams p(0.3);
  StateVector psi = basis_state(cfg, site_index(cfg, 2, 1, 1));
  apply_x_delta(psi, p);
  CHECK(psi[site_index(cfg, 2, 1, 0)] == doctest::Approx(std::sin(0.3)));
  CHECK(psi[site_index(cfg, 2, 1, 1)] == doctest::Approx(std::cos(0.3)));
  apply_x_delta(psi, p, true);
  CHECK(max_abs_diff(psi, basis_state(cfg, site_index(cfg, 2, 1, 1))) < 1e-15);

  StateVector e0 = basis_state(cfg, site_index(cfg, 0, 3, 0));
  apply_x_delta(e0, p);
  CHECK(e0[site_index(cfg, 0, 3, 0)] == doctest::Approx(std::cos(0.3)));
  CHECK(e0[site_index(cfg, 0, 3, 1)] == doctest::Approx(-std::sin(0.3)));
}

TEST_CASE("Zbar and controlled oracle") {
  const auto cfg = new_config(4, {3, 1}, Mode::Ancilla);
  std::mt19937_64 rng(1);
  const StateVector start = random_state(cfg, rng);

  StateVector z = start;
  apply_zbar(z);
  for (std::size_t i = 0; i < z.size(); ++i) CHECK(z[i] == (i < cfg.N() ? -start[i] : start[i]));

  StateVector r = start;
  apply_controlled_oracle(r, cfg);
  const std::size_t hit = site_index(cfg, 3, 1, 1);
  for (std::size_t i = 0; i < r.size(); ++i) CHECK(r[i] == (i == hit ? -start[i] : start[i]));
}

TEST_CASE("effective marked-site map is Z X_{2 delta}") {
  const auto cfg = new_config(4, {1, 1}, Mode::Ancilla);
  for (double delta : {0.2, 0.7, 1.2}) {
    const AncillaParams p(delta);
    // Columns of X^T diag(1,-1) X on (a0, a1) at the marked site.
    const double expect[2][2] = {{std::cos(2 * delta), std::sin(2 * delta)},
                                 {std::sin(2 * delta), -std::cos(2 * delta)}};
    for (int col = 0; col < 2; ++col) {
      StateVector psi = basis_state(cfg, site_index(cfg, 1, 1, col));
      apply_x_delta(psi, p);
      apply_controlled_oracle(psi, cfg);
      apply_x_delta(psi, p, true);
      for (int row = 0; row < 2; ++row)
        CHECK(std::abs(psi[site_index(cfg, 1, 1, row)] - expect[row][col]) < 1e-14);
      double rest = 0;
      for (std::size_t i = 0; i < psi.size(); ++i)
        if (i != site_index(cfg, 1, 1, 0) && i != site_index(cfg, 1, 1, 1))
          rest = std::max(rest, std::abs(psi[i]));
      CHECK(rest < 1e-15);
    }
  }
}

TEST_CASE("controlled walk moves only the a=1 sector") {
  std::mt19937_64 rng(2);
  const auto cfg = new_config(4, {0, 0}, Mode::Ancilla);
  const WalkParams wp(kS, 3);
  const StateVector start = random_state(cfg, rng);
  StateVector psi = start;
  apply_controlled_walk_power(psi, wp);
  for (std::size_t i = 0; i < cfg.N(); ++i) CHECK(psi[i] == start[i]);

  const auto w = dense::dense_walk_matrix(cfg.with_mode(Mode::Plain), wp);
  const Eigen::MatrixXcd w3 = w.m * w.m * w.m;
  Eigen::MatrixXcd block = Eigen::MatrixXcd::Zero(32, 32);
  block.topLeftCorner(16, 16).setIdentity();
  block.bottomRightCorner(16, 16) = w3;
  const Eigen::VectorXcd expect = block * dense::to_dense(start);
  CHECK((dense::to_dense(psi) - expect).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("each operation preserves the norm") {
  std::mt19937_64 rng(4);
  const auto cfg = new_config(16, {5, 7}, Mode::Ancilla);
  const AncillaParams p(0.9);
  StateVector psi = random_state(cfg, rng);
  apply_x_delta(psi, p);
  CHECK(std::abs(norm(psi) - 1) < 1e-13);
  apply_controlled_oracle(psi, cfg);
  CHECK(std::abs(norm(psi) - 1) < 1e-13);
  apply_x_delta(psi, p, true);
  CHECK(std::abs(norm(psi) - 1) < 1e-13);
  apply_controlled_walk_power(psi, WalkParams(kS, 3));
  CHECK(std::abs(norm(psi) - 1) < 1e-13);
  apply_zbar(psi);
  CHECK(std::abs(norm(psi) - 1) < 1e-13);
}

TEST_CASE("delta=0 iteration equals the plain step up to the sector sign") {
  const auto plain_cfg = new_config(8, {2, 4});
  const auto cfg = plain_cfg.with_mode(Mode::Ancilla);
  const WalkParams wp(kS, 3);
  StateVector plain = uniform_state(plain_cfg);
  StateVector anc = uniform_state(cfg);
  for (int it = 0; it < 30; ++it) {
    apply_oracle(plain, plain_cfg);
    apply_walk_power(plain, wp);
    tulsi_iteration(anc, cfg, wp, AncillaParams(0.0));
    double d = 0;
    for (std::size_t i = 0; i < plain_cfg.N(); ++i) {
      d = std::max(d, std::abs(anc.sector(0)[i]));
      d = std::max(d, std::abs(anc.sector(1)[i] - plain[i]));
    }
    CHECK(d < 1e-12);
  }
}

TEST_CASE("delta=pi/2 leaves the zero sector exactly empty") {
  const auto cfg = new_config(8, {3, 3}, Mode::Ancilla);
  StateVector psi = uniform_state(cfg);
  for (int it = 0; it < 50; ++it) {
    tulsi_iteration(psi, cfg, WalkParams(kS, 3), AncillaParams(std::numbers::pi / 2));
    for (double v : psi.sector(0)) REQUIRE(v == 0.0);
  }
}

TEST_CASE("zero sector stays empty away from the marked site") {
  for (int L : {4, 8, 16}) {
    const auto cfg = new_config(L, {L / 2, 1}, Mode::Ancilla);
    for (double delta : {0.3, 1.0, 1.4}) {
      StateVector psi = uniform_state(cfg);
      const WalkOperator walk(WalkParams(kS, 3));
      double worst = 0;
      for (int it = 0; it < 50; ++it) {
        tulsi_iteration(psi, cfg, walk, AncillaParams(delta));
        worst = std::max(worst, max_zero_sector_off_marked(psi, cfg));
      }
      CHECK(worst < 1e-12);
    }
  }
}

TEST_CASE("iteration agrees with the dense operator") {
  std::mt19937_64 rng(6);
  const auto cfg = new_config(4, {1, 2}, Mode::Ancilla);
  const WalkParams wp(0.6, 2);
  const AncillaParams ap(0.5);
  const auto dense_it = dense::dense_iteration_matrix(cfg, wp, ap);
  for (int trial = 0; trial < 5; ++trial) {
    StateVector psi = random_state(cfg, rng);
    const Eigen::VectorXcd expect = dense_it.m * dense::to_dense(psi);
    tulsi_iteration(psi, cfg, wp, ap);
    CHECK((dense::to_dense(psi) - expect).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("norm drift over many controlled iterations" * doctest::timeout(120)) {
  std::mt19937_64 rng(8);
  const auto cfg = new_config(64, {0, 0}, Mode::Ancilla);
  StateVector psi = random_state(cfg, rng);
  const WalkOperator walk(WalkParams(kS, 3));
  const AncillaParams ap = AncillaParams::from_cos_delta(0.5);
  for (int it = 0; it < 10000; ++it) tulsi_iteration(psi, cfg, walk, ap);
  CHECK(std::abs(norm(psi) - 1.0) < 1e-9);
}

TEST_CASE("ancilla operations reject plain states") {
  const auto cfg = new_config(4);
  StateVector psi = uniform_state(cfg);
  CHECK_THROWS_AS(apply_x_delta(psi, AncillaParams(0.1)), ValidationError);
  CHECK_THROWS_AS(apply_zbar(psi), ValidationError);
  CHECK_THROWS_AS(apply_controlled_oracle(psi, cfg), ValidationError);
  CHECK_THROWS_AS(tulsi_iteration(psi, cfg, WalkParams(kS, 1), AncillaParams(0.1)),
                  ValidationError);
}

}  // TEST_SUITE
