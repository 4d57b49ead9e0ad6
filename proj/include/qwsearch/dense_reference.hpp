#pragma once

// Brute-force dense-matrix evolution for small lattices. Shares no code with
// the plaquette kernel: blocks are rebuilt from Pauli products in complex
// arithmetic and even plaquettes are laid out literally with offsets 0, -1
// from their even-even corner.

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "qwsearch/lattice.hpp"
#include "qwsearch/oracle_ancilla.hpp"

namespace qwsearch::dense {

/// Largest lattice the dense path accepts (dimension 64 per sector).
inline constexpr int kMaxL = 8;

struct DenseOperator {
  Eigen::MatrixXcd m;
  Eigen::Index dim() const { return m.rows(); }
};

/// Trotter factors c*I - i*s*sqrt2*H for the odd block
/// and its reflected-frame even partner.
Eigen::Matrix4cd odd_block(double s);
Eigen::Matrix4cd even_block(double s);

/// W = U_e U_o over the N lattice sites. Always the staggered (reflected)
/// convention regardless of wparams.even_frame().
DenseOperator dense_walk_matrix(const LatticeConfig& config, const WalkParams& wparams);

/// W^t1 R (plain) or Zbar (c1 W^t1) X^T (c1 R) X (ancilla).
DenseOperator dense_iteration_matrix(const LatticeConfig& config, const WalkParams& wparams,
                                     const std::optional<AncillaParams>& aparams);

/// Marked-site probability after each of t2 iterations from the uniform start.
std::vector<double> dense_search(const LatticeConfig& config, const WalkParams& wparams,
                                 const std::optional<AncillaParams>& aparams, int t2);

/// max |(m^H m - I)_ij|.
double unitarity_check(const DenseOperator& op);

Eigen::VectorXcd to_dense(const StateVector& state);

}  // namespace qwsearch::dense
