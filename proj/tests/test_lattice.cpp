#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "doctest.h"
#include "qwsearch/lattice.hpp"
#include "qwsearch/verify.hpp"

using namespace qwsearch;

TEST_SUITE("lattice") {

TEST_CASE("new_config validates extent and marked vertex") {
  const auto cfg = new_config(4, {0, 0}, Mode::Plain);
  CHECK(cfg.N() == 16);
  CHECK(cfg.dimension() == 16);
  CHECK(cfg.with_mode(Mode::Ancilla).dimension() == 32);

  CHECK_THROWS_WITH_AS(new_config(5), doctest::Contains("L must be even"), ValidationError);
  CHECK_THROWS_WITH_AS(new_config(2), doctest::Contains("L must be at least 4"), ValidationError);
  CHECK_THROWS_WITH_AS(new_config(4, {4, 0}), doctest::Contains("marked out of range"),
                       ValidationError);
  CHECK_THROWS_AS(new_config(4, {0, -1}), ValidationError);
}

TEST_CASE("walk parameters") {
  for (double s : {0.1, 0.3, 1 / std::sqrt(2.0), 0.9}) {
    const WalkParams wp(s, 3);
    CHECK(wp.c() * wp.c() + wp.s() * wp.s() == doctest::Approx(1.0).scale(0).epsilon(1e-15));
    CHECK(wp.theta() == std::sqrt(2.0) * std::asin(s) * 3);
  }
  CHECK_THROWS_AS(WalkParams(0.0, 1), ValidationError);
  CHECK_THROWS_AS(WalkParams(1.0, 1), ValidationError);
  CHECK_THROWS_WITH_AS(WalkParams(0.5, 0), doctest::Contains("t1"), ValidationError);
}

TEST_CASE("uniform state") {
  const auto plain = uniform_state(new_config(4));
  REQUIRE(plain.size() == 16);
  for (double a : plain.amplitudes()) CHECK(a == 0.25);
  CHECK(norm(plain) == doctest::Approx(1.0).scale(0).epsilon(1e-15));

  const auto anc = uniform_state(new_config(4, {0, 0}, Mode::Ancilla));
  REQUIRE(anc.size() == 32);
  for (std::size_t i = 0; i < 16; ++i) CHECK(anc[i] == 0.0);
  for (std::size_t i = 16; i < 32; ++i) CHECK(anc[i] == 0.25);
  CHECK(norm(anc) == doctest::Approx(1.0).scale(0).epsilon(1e-15));

  for (int L : {6, 8, 64, 250})
    CHECK(std::abs(norm(uniform_state(new_config(L))) - 1.0) < 1e-12);
}

TEST_CASE("site_index") {
  const auto plain = new_config(4);
  const auto anc = new_config(4, {0, 0}, Mode::Ancilla);
  CHECK(site_index(plain, 3, 1) == 7);
  CHECK(site_index(anc, 0, 0, 1) == 16);
  CHECK(site_index(anc, 0, 0, 0) == 0);

  CHECK_THROWS_AS(site_index(plain, 4, 0), ValidationError);
  CHECK_THROWS_AS(site_index(plain, 0, -1), ValidationError);
  CHECK_THROWS_AS(site_index(plain, 0, 0, 0), ValidationError);
  CHECK_THROWS_AS(site_index(anc, 0, 0), ValidationError);
  CHECK_THROWS_AS(site_index(anc, 0, 0, 2), ValidationError);
}

TEST_CASE("site_index is a bijection") {
  for (int L : {4, 6, 10}) {
    const auto anc = new_config(L, {0, 0}, Mode::Ancilla);
    std::set<std::size_t> seen;
    for (int a = 0; a < 2; ++a)
      for (int x2 = 0; x2 < L; ++x2)
        for (int x1 = 0; x1 < L; ++x1) seen.insert(site_index(anc, x1, x2, a));
    CHECK(seen.size() == anc.dimension());
    CHECK(*seen.rbegin() == anc.dimension() - 1);
  }
}

TEST_CASE("norm") {
  const auto cfg = new_config(4);
  CHECK(norm(zero_state(cfg)) == 0.0);
  CHECK(norm(basis_state(cfg, 5)) == 1.0);
}

TEST_CASE("marked probability") {
  const auto plain = new_config(4);
  const auto anc = new_config(4, {0, 0}, Mode::Ancilla);
  CHECK(marked_probability(uniform_state(plain), plain) == doctest::Approx(0.0625));
  CHECK(marked_probability(uniform_state(anc), anc) == doctest::Approx(0.0625));
  CHECK(marked_probability(basis_state(plain, 0), plain) == 1.0);
  CHECK(marked_probability(basis_state(anc, 0), anc) == 1.0);
  CHECK(marked_probability(basis_state(anc, 16), anc) == 1.0);
  CHECK_THROWS_AS(marked_probability(uniform_state(plain), anc), ValidationError);
}

TEST_CASE("projected probability") {
  const auto anc = new_config(4, {1, 2}, Mode::Ancilla);
  const auto one_marked = basis_state(anc, site_index(anc, 1, 2, 1));
  CHECK(projected_probability(one_marked, anc, 0.0) == doctest::Approx(1.0));
  CHECK(std::abs(projected_probability(one_marked, anc, std::numbers::pi / 2)) < 1e-30);
  CHECK(projected_probability(one_marked, anc, std::numbers::pi / 4) == doctest::Approx(0.5));

  const auto plain = new_config(4);
  CHECK_THROWS_AS(projected_probability(uniform_state(plain), plain, 0.0), ValidationError);
}

TEST_CASE("probability bounds on random states") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> angle(0.0, std::numbers::pi / 2);
  for (int L : {4, 8, 12}) {
    const auto anc = new_config(L, {L / 2, 1}, Mode::Ancilla);
    for (int trial = 0; trial < 25; ++trial) {
      const StateVector psi = random_state(anc, rng);
      const double pm = marked_probability(psi, anc);
      const double n = norm(psi);
      CHECK(pm <= n * n + 1e-15);
      for (int k = 0; k < 5; ++k)
        CHECK(projected_probability(psi, anc, angle(rng)) <= pm + 1e-12);
    }
  }
}

}  // TEST_SUITE
