#include "qwsearch/dirac_walk.hpp"

#include <cmath>

namespace qwsearch {

std::array<double, 16> kinetic_generator_a() {
  return {0, 1, 0, 0,  //
          -1, 0, 0, 0,  //
          0, 0, 0, 1,  //
          0, 0, -1, 0};
}

std::array<double, 16> kinetic_generator_b() {
  return {0, 0, 1, 0,  //
          0, 0, 0, -1,  //
          -1, 0, 0, 0,  //
          0, 1, 0, 0};
}

PlaquetteBlock build_block(double s, Parity parity, EvenFrame frame) {
  if (!(s > 0.0 && s < 1.0)) throw ValidationError("s must lie in (0,1)");
  const double c = std::sqrt(1.0 - s * s);
  const double k = s / std::sqrt(2.0);
  const auto a = kinetic_generator_a();
  const auto b = kinetic_generator_b();

  // Sign of (A, B) in the generator: odd = A + B. Reflecting both local
  // coordinates maps A -> -A and B -> B, so -(A + B) in the reflected frame is
  // A - B in the forward frame of the odd-odd anchor.
  double sa = 1.0, sb = 1.0;
  if (parity == Parity::Even) {
    if (frame == EvenFrame::Reflected) {
      sb = -1.0;
    } else {
      sa = -1.0;
      sb = -1.0;
    }
  }

  PlaquetteBlock block;
  block.parity = parity;
  block.s = s;
  for (int i = 0; i < 16; ++i) block.m[i] = k * (sa * a[i] + sb * b[i]);
  for (int i = 0; i < 4; ++i) block.m[5 * i] += c;
  return block;
}

void apply_half_step(std::span<double> sector, int L, const PlaquetteBlock& block) {
  const std::size_t Ls = static_cast<std::size_t>(L);
  if (sector.size() != Ls * Ls) throw ValidationError("sector size does not match L");
  const int anchor = block.parity == Parity::Odd ? 0 : 1;
  const auto& m = block.m;
  double* data = sector.data();

  for (int x2 = anchor; x2 < L; x2 += 2) {
    double* row0 = data + static_cast<std::size_t>(x2) * Ls;
    double* row1 = data + static_cast<std::size_t>(x2 + 1 == L ? 0 : x2 + 1) * Ls;
    for (int x1 = anchor; x1 < L; x1 += 2) {
      const int x1n = x1 + 1 == L ? 0 : x1 + 1;
      const double v0 = row0[x1];
      const double v1 = row1[x1];
      const double v2 = row0[x1n];
      const double v3 = row1[x1n];
      row0[x1] = m[0] * v0 + m[1] * v1 + m[2] * v2 + m[3] * v3;
      row1[x1] = m[4] * v0 + m[5] * v1 + m[6] * v2 + m[7] * v3;
      row0[x1n] = m[8] * v0 + m[9] * v1 + m[10] * v2 + m[11] * v3;
      row1[x1n] = m[12] * v0 + m[13] * v1 + m[14] * v2 + m[15] * v3;
    }
  }
}

void apply_half_step(StateVector& state, const PlaquetteBlock& block) {
  if (state.mode() != Mode::Plain)
    throw ValidationError("mode: apply_half_step on a full state needs plain mode");
  apply_half_step(state.amplitudes(), state.L(), block);
}

WalkOperator::WalkOperator(const WalkParams& params)
    : odd(build_block(params.s(), Parity::Odd, params.even_frame())),
      even(build_block(params.s(), Parity::Even, params.even_frame())),
      t1(params.t1()) {}

void apply_walk(std::span<double> sector, int L, const WalkOperator& walk) {
  apply_half_step(sector, L, walk.odd);
  apply_half_step(sector, L, walk.even);
}

void apply_walk_power(std::span<double> sector, int L, const WalkOperator& walk) {
  for (int i = 0; i < walk.t1; ++i) apply_walk(sector, L, walk);
}

void apply_walk(StateVector& state, const WalkParams& params) {
  if (state.mode() != Mode::Plain)
    throw ValidationError("mode: apply_walk needs plain mode; use the controlled walk");
  apply_walk(state.amplitudes(), state.L(), WalkOperator(params));
}

void apply_walk_power(StateVector& state, const WalkParams& params) {
  if (state.mode() != Mode::Plain)
    throw ValidationError("mode: apply_walk_power needs plain mode; use the controlled walk");
  apply_walk_power(state.amplitudes(), state.L(), WalkOperator(params));
}

}  // namespace qwsearch
