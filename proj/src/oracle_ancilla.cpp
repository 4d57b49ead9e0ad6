#include "qwsearch/oracle_ancilla.hpp"

#include <cmath>
#include <numbers>

namespace qwsearch {

namespace {

void require_ancilla(const StateVector& state, const char* what) {
  if (state.mode() != Mode::Ancilla)
    throw ValidationError(std::string("mode: ") + what + " needs an ancilla-mode state");
}

}  // namespace

AncillaParams::AncillaParams(double delta)
    : delta_(delta), cos_(std::cos(delta)), sin_(std::sin(delta)) {
  if (!(delta >= 0.0 && delta <= std::numbers::pi / 2))
    throw ValidationError("delta must lie in [0, pi/2]");
  // cos(pi/2) rounds to 6e-17; pin the endpoints.
  if (delta == std::numbers::pi / 2) {
    cos_ = 0.0;
    sin_ = 1.0;
  }
}

AncillaParams AncillaParams::from_cos_delta(double cos_delta) {
  if (!(cos_delta >= 0.0 && cos_delta <= 1.0))
    throw ValidationError("cos_delta must lie in [0, 1]");
  AncillaParams p(std::acos(cos_delta));
  p.cos_ = cos_delta;
  p.sin_ = std::sqrt(1.0 - cos_delta * cos_delta);
  return p;
}

void apply_oracle(StateVector& state, const LatticeConfig& config) {
  if (state.mode() != Mode::Plain || config.mode() != Mode::Plain)
    throw ValidationError("mode: apply_oracle needs plain mode; use apply_controlled_oracle");
  const auto [m1, m2] = config.marked();
  state[site_index(config, m1, m2)] *= -1.0;
}

void apply_x_delta(StateVector& state, const AncillaParams& params, bool adjoint) {
  require_ancilla(state, "apply_x_delta");
  const double c = params.cos_delta();
  const double s = adjoint ? -params.sin_delta() : params.sin_delta();
  auto a0 = state.sector(0);
  auto a1 = state.sector(1);
  for (std::size_t i = 0; i < a0.size(); ++i) {
    const double u = a0[i];
    const double v = a1[i];
    a0[i] = c * u + s * v;
    a1[i] = -s * u + c * v;
  }
}

void apply_zbar(StateVector& state) {
  require_ancilla(state, "apply_zbar");
  for (double& amp : state.sector(0)) amp = -amp;
}

void apply_controlled_oracle(StateVector& state, const LatticeConfig& config) {
  require_ancilla(state, "apply_controlled_oracle");
  if (config.mode() != Mode::Ancilla)
    throw ValidationError("mode: lattice configuration is not in ancilla mode");
  const auto [m1, m2] = config.marked();
  state[site_index(config, m1, m2, 1)] *= -1.0;
}

void apply_controlled_walk_power(StateVector& state, const WalkOperator& walk) {
  require_ancilla(state, "apply_controlled_walk_power");
  apply_walk_power(state.sector(1), state.L(), walk);
}

void apply_controlled_walk_power(StateVector& state, const WalkParams& params) {
  apply_controlled_walk_power(state, WalkOperator(params));
}

void tulsi_iteration(StateVector& state, const LatticeConfig& config, const WalkOperator& walk,
                     const AncillaParams& aparams) {
  require_ancilla(state, "tulsi_iteration");
  apply_x_delta(state, aparams);
  apply_controlled_oracle(state, config);
  apply_x_delta(state, aparams, /*adjoint=*/true);
  apply_controlled_walk_power(state, walk);
  apply_zbar(state);
}

void tulsi_iteration(StateVector& state, const LatticeConfig& config, const WalkParams& wparams,
                     const AncillaParams& aparams) {
  tulsi_iteration(state, config, WalkOperator(wparams), aparams);
}

}  // namespace qwsearch
