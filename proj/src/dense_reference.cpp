#include "qwsearch/dense_reference.hpp"

#include <cmath>
#include <complex>

namespace qwsearch::dense {

namespace {

using cd = std::complex<double>;
constexpr cd I1{0.0, 1.0};

Eigen::Matrix2cd pauli(int k) {
  Eigen::Matrix2cd p;
  switch (k) {
    case 0: p << 1, 0, 0, 1; break;
    case 1: p << 0, 1, 1, 0; break;
    case 2: p << 0, -I1, I1, 0; break;
    default: p << 1, 0, 0, -1; break;
  }
  return p;
}

/// First factor acts on u1, index b = 2*u1 + u2.
Eigen::Matrix4cd kron(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
  Eigen::Matrix4cd out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return out;
}

Eigen::Matrix4cd odd_hamiltonian() {
  return -0.5 * (kron(pauli(0), pauli(2)) + kron(pauli(2), pauli(3)));
}

Eigen::Matrix4cd trotter_factor(double s, const Eigen::Matrix4cd& h) {
  const double c = std::sqrt(1.0 - s * s);
  return c * Eigen::Matrix4cd::Identity() - I1 * s * std::sqrt(2.0) * h;
}

int wrap(int x, int L) { return ((x % L) + L) % L; }

void require_small(const LatticeConfig& config) {
  if (config.L() > kMaxL)
    throw ValidationError("L too large for the dense reference (max " + std::to_string(kMaxL) +
                          ")");
}

/// Places block on every plaquette whose sites are corner + sign*(u1, u2).
Eigen::MatrixXcd tiling_matrix(int L, const Eigen::Matrix4cd& block, int sign) {
  const int N = L * L;
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(N, N);
  for (int e2 = 0; e2 < L; e2 += 2) {
    for (int e1 = 0; e1 < L; e1 += 2) {
      int site[4];
      for (int u1 = 0; u1 < 2; ++u1)
        for (int u2 = 0; u2 < 2; ++u2)
          site[2 * u1 + u2] = wrap(e2 + sign * u2, L) * L + wrap(e1 + sign * u1, L);
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) u(site[r], site[c]) = block(r, c);
    }
  }
  return u;
}

Eigen::MatrixXcd matrix_power(const Eigen::MatrixXcd& m, int p) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(m.rows(), m.cols());
  for (int i = 0; i < p; ++i) out = m * out;
  return out;
}

}  // namespace

Eigen::Matrix4cd odd_block(double s) { return trotter_factor(s, odd_hamiltonian()); }

Eigen::Matrix4cd even_block(double s) { return trotter_factor(s, -odd_hamiltonian()); }

DenseOperator dense_walk_matrix(const LatticeConfig& config, const WalkParams& wparams) {
  require_small(config);
  const int L = config.L();
  const Eigen::MatrixXcd u_odd = tiling_matrix(L, odd_block(wparams.s()), +1);
  // Even plaquettes: all local coordinates flipped in sign.
  const Eigen::MatrixXcd u_even = tiling_matrix(L, even_block(wparams.s()), -1);
  return {u_even * u_odd};
}

DenseOperator dense_iteration_matrix(const LatticeConfig& config, const WalkParams& wparams,
                                     const std::optional<AncillaParams>& aparams) {
  require_small(config);
  const Eigen::Index N = static_cast<Eigen::Index>(config.N());
  const auto [m1, m2] = config.marked();
  const Eigen::Index marked = static_cast<Eigen::Index>(m2) * config.L() + m1;
  const Eigen::MatrixXcd walk = matrix_power(dense_walk_matrix(config, wparams).m, wparams.t1());

  if (config.mode() == Mode::Plain) {
    Eigen::MatrixXcd oracle = Eigen::MatrixXcd::Identity(N, N);
    oracle(marked, marked) = -1.0;
    return {walk * oracle};
  }
  if (!aparams) throw ValidationError("delta: ancilla iteration needs ancilla parameters");

  const double c = std::cos(aparams->delta());
  const double s = std::sin(aparams->delta());
  Eigen::Matrix2cd x_delta;
  x_delta << c, s, -s, c;
  // Ancilla is the slow index: row a*N + site.
  Eigen::MatrixXcd x_full = Eigen::MatrixXcd::Zero(2 * N, 2 * N);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      x_full.block(a * N, b * N, N, N) = x_delta(a, b) * Eigen::MatrixXcd::Identity(N, N);

  Eigen::MatrixXcd c_oracle = Eigen::MatrixXcd::Identity(2 * N, 2 * N);
  c_oracle(N + marked, N + marked) = -1.0;

  Eigen::MatrixXcd c_walk = Eigen::MatrixXcd::Identity(2 * N, 2 * N);
  c_walk.block(N, N, N, N) = walk;

  Eigen::MatrixXcd zbar = Eigen::MatrixXcd::Identity(2 * N, 2 * N);
  zbar.block(0, 0, N, N) *= -1.0;

  return {zbar * c_walk * x_full.adjoint() * c_oracle * x_full};
}

std::vector<double> dense_search(const LatticeConfig& config, const WalkParams& wparams,
                                 const std::optional<AncillaParams>& aparams, int t2) {
  if (t2 < 0) throw ValidationError("t2 must be non-negative");
  const DenseOperator step = dense_iteration_matrix(config, wparams, aparams);
  Eigen::VectorXcd psi = to_dense(uniform_state(config));
  const Eigen::Index N = static_cast<Eigen::Index>(config.N());
  const auto [m1, m2] = config.marked();
  const Eigen::Index marked = static_cast<Eigen::Index>(m2) * config.L() + m1;

  std::vector<double> series;
  series.reserve(static_cast<std::size_t>(t2));
  for (int t = 0; t < t2; ++t) {
    psi = step.m * psi;
    double p = std::norm(psi(marked));
    if (config.mode() == Mode::Ancilla) p += std::norm(psi(N + marked));
    series.push_back(p);
  }
  return series;
}

double unitarity_check(const DenseOperator& op) {
  const Eigen::MatrixXcd d =
      op.m.adjoint() * op.m - Eigen::MatrixXcd::Identity(op.m.rows(), op.m.cols());
  return d.cwiseAbs().maxCoeff();
}

Eigen::VectorXcd to_dense(const StateVector& state) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(state.size()));
  for (std::size_t i = 0; i < state.size(); ++i) v(static_cast<Eigen::Index>(i)) = state[i];
  return v;
}

}  // namespace qwsearch::dense
