#pragma once

#include "qwsearch/dirac_walk.hpp"
#include "qwsearch/lattice.hpp"

namespace qwsearch {

/// Control angle of the ancilla rotation X_delta = [[cos, sin], [-sin, cos]].
class AncillaParams {
 public:
  explicit AncillaParams(double delta);
  static AncillaParams from_cos_delta(double cos_delta);

  double delta() const { return delta_; }
  double cos_delta() const { return cos_; }
  double sin_delta() const { return sin_; }

 private:
  double delta_;
  double cos_;
  double sin_;
};

/// R = I - 2|marked><marked| on a plain state.
void apply_oracle(StateVector& state, const LatticeConfig& config);

void apply_x_delta(StateVector& state, const AncillaParams& params, bool adjoint = false);
/// Zbar = diag(-1, 1) on the ancilla.
void apply_zbar(StateVector& state);
/// Negates only |1> (x) |marked>.
void apply_controlled_oracle(StateVector& state, const LatticeConfig& config);
/// diag(I, W^t1): walks the a = 1 sector only.
void apply_controlled_walk_power(StateVector& state, const WalkOperator& walk);
void apply_controlled_walk_power(StateVector& state, const WalkParams& params);

/// One pass of the controlled circuit:
/// X_delta, controlled R, X_delta^T, controlled W^t1, Zbar.
void tulsi_iteration(StateVector& state, const LatticeConfig& config, const WalkOperator& walk,
                     const AncillaParams& aparams);
void tulsi_iteration(StateVector& state, const LatticeConfig& config, const WalkParams& wparams,
                     const AncillaParams& aparams);

}  // namespace qwsearch
