#pragma once

#include <array>
#include <span>

#include "qwsearch/lattice.hpp"

namespace qwsearch {

enum class Parity { Odd, Even };

/// Real orthogonal 4x4 update for one 2x2 plaquette, row-major.
///
/// Intra-plaquette index b = 2*u1 + u2, where (u1, u2) are the site's offsets
/// from the plaquette anchor along x1 and x2. The odd block is
/// c*I + (s/sqrt2)*(A + B) with A = I (x) i*sigma2 and B = i*sigma2 (x) sigma3.
struct PlaquetteBlock {
  std::array<double, 16> m{};
  Parity parity = Parity::Odd;
  double s = 0.0;

  double operator()(int row, int col) const { return m[4 * row + col]; }
};

/// The antisymmetric kinetic generators, A = I (x) i*sigma2 and
/// B = i*sigma2 (x) sigma3 in the b = 2*u1 + u2 basis.
std::array<double, 16> kinetic_generator_a();
std::array<double, 16> kinetic_generator_b();

PlaquetteBlock build_block(double s, Parity parity, EvenFrame frame = EvenFrame::Reflected);

/// Applies block to every plaquette of its tiling on one L x L sector.
/// Odd plaquettes are anchored at (even, even), even plaquettes at
/// (odd, odd) with periodic wrap.
void apply_half_step(std::span<double> sector, int L, const PlaquetteBlock& block);
void apply_half_step(StateVector& state, const PlaquetteBlock& block);

/// Precomputed U_o / U_e pair for repeated walk steps.
struct WalkOperator {
  explicit WalkOperator(const WalkParams& params);

  PlaquetteBlock odd;
  PlaquetteBlock even;
  int t1;
};

/// W = U_e U_o on one sector.
void apply_walk(std::span<double> sector, int L, const WalkOperator& walk);
/// W^t1 on one sector.
void apply_walk_power(std::span<double> sector, int L, const WalkOperator& walk);

void apply_walk(StateVector& state, const WalkParams& params);
void apply_walk_power(StateVector& state, const WalkParams& params);

}  // namespace qwsearch
