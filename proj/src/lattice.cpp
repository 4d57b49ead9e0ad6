#include "qwsearch/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qwsearch {

const char* to_string(Mode mode) { return mode == Mode::Plain ? "plain" : "ancilla"; }

Mode parse_mode(const std::string& text) {
  if (text == "plain") return Mode::Plain;
  if (text == "ancilla") return Mode::Ancilla;
  throw ValidationError("mode must be 'plain' or 'ancilla', got '" + text + "'");
}

LatticeConfig::LatticeConfig(int L, Site marked, Mode mode)
    : L_(L), N_(0), marked_(marked), mode_(mode) {
  if (L % 2 != 0) throw ValidationError("L must be even (got " + std::to_string(L) + ")");
  if (L < 4) throw ValidationError("L must be at least 4 (got " + std::to_string(L) + ")");
  if (marked.x1 < 0 || marked.x1 >= L || marked.x2 < 0 || marked.x2 >= L)
    throw ValidationError("marked out of range: (" + std::to_string(marked.x1) + "," +
                          std::to_string(marked.x2) + ") for L=" + std::to_string(L));
  N_ = static_cast<std::size_t>(L) * static_cast<std::size_t>(L);
}

LatticeConfig new_config(int L, Site marked, Mode mode) { return {L, marked, mode}; }

WalkParams::WalkParams(double s, int t1, EvenFrame frame)
    : s_(s), c_(0), tau_(0), t1_(t1), theta_(0), frame_(frame) {
  if (!(s > 0.0 && s < 1.0)) throw ValidationError("s must lie in (0,1)");
  if (t1 < 1) throw ValidationError("t1 must be at least 1");
  c_ = std::sqrt(1.0 - s * s);
  tau_ = std::sqrt(2.0) * std::asin(s);
  theta_ = t1 * tau_;
}

StateVector::StateVector(Mode mode, int L)
    : mode_(mode),
      L_(L),
      amplitudes_(static_cast<std::size_t>(L) * L * (mode == Mode::Ancilla ? 2 : 1), 0.0) {}

std::span<double> StateVector::sector(int a) {
  if (a < 0 || a > (mode_ == Mode::Ancilla ? 1 : 0)) throw ValidationError("a: sector out of range");
  return std::span<double>(amplitudes_).subspan(a * N(), N());
}

std::span<const double> StateVector::sector(int a) const {
  if (a < 0 || a > (mode_ == Mode::Ancilla ? 1 : 0)) throw ValidationError("a: sector out of range");
  return std::span<const double>(amplitudes_).subspan(a * N(), N());
}

StateVector zero_state(const LatticeConfig& config) { return {config.mode(), config.L()}; }

StateVector uniform_state(const LatticeConfig& config) {
  StateVector state = zero_state(config);
  const double amp = 1.0 / std::sqrt(static_cast<double>(config.N()));
  // |1> (x) |s> in ancilla mode: only sector 1 is populated.
  auto target = state.sector(config.mode() == Mode::Ancilla ? 1 : 0);
  std::fill(target.begin(), target.end(), amp);
  return state;
}

StateVector basis_state(const LatticeConfig& config, std::size_t index) {
  if (index >= config.dimension()) throw ValidationError("index out of range");
  StateVector state = zero_state(config);
  state[index] = 1.0;
  return state;
}

std::size_t site_index(const LatticeConfig& config, int x1, int x2, std::optional<int> a) {
  const int L = config.L();
  if (x1 < 0 || x1 >= L) throw ValidationError("x1 out of range");
  if (x2 < 0 || x2 >= L) throw ValidationError("x2 out of range");
  const std::size_t flat = static_cast<std::size_t>(x2) * L + x1;
  if (config.mode() == Mode::Plain) {
    if (a) throw ValidationError("a: sector given for a plain-mode lattice");
    return flat;
  }
  if (!a) throw ValidationError("a: sector required for an ancilla-mode lattice");
  if (*a != 0 && *a != 1) throw ValidationError("a: sector must be 0 or 1");
  return static_cast<std::size_t>(*a) * config.N() + flat;
}

double norm(const StateVector& state) {
  // Sequential left-to-right sum: bit-identical across runs.
  const auto amps = state.amplitudes();
  const double sum = std::inner_product(amps.begin(), amps.end(), amps.begin(), 0.0);
  return std::sqrt(sum);
}

namespace {

void require_same_mode(const StateVector& state, const LatticeConfig& config) {
  if (state.mode() != config.mode() || state.L() != config.L())
    throw ValidationError("mode: state and lattice configuration disagree");
}

}  // namespace

double marked_probability(const StateVector& state, const LatticeConfig& config) {
  require_same_mode(state, config);
  const auto [m1, m2] = config.marked();
  if (config.mode() == Mode::Plain) {
    const double amp = state[site_index(config, m1, m2)];
    return amp * amp;
  }
  const double a0 = state[site_index(config, m1, m2, 0)];
  const double a1 = state[site_index(config, m1, m2, 1)];
  return a0 * a0 + a1 * a1;
}

double projected_probability(const StateVector& state, const LatticeConfig& config,
                             double delta) {
  require_same_mode(state, config);
  if (config.mode() != Mode::Ancilla)
    throw ValidationError("mode: projected probability needs an ancilla-mode state");
  const auto [m1, m2] = config.marked();
  const double a0 = state[site_index(config, m1, m2, 0)];
  const double a1 = state[site_index(config, m1, m2, 1)];
  const double overlap = std::sin(delta) * a0 + std::cos(delta) * a1;
  return overlap * overlap;
}

}  // namespace qwsearch
