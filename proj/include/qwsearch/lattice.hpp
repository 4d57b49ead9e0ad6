#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qwsearch/error.hpp"

namespace qwsearch {

enum class Mode { Plain, Ancilla };

const char* to_string(Mode mode);
Mode parse_mode(const std::string& text);

struct Site {
  int x1 = 0;
  int x2 = 0;
  friend bool operator==(const Site&, const Site&) = default;
};

/// Periodic L x L square lattice with one marked vertex.
///
/// L must be even and at least 4 so that the two plaquette tilings are
/// distinct partitions of the lattice.
class LatticeConfig {
 public:
  LatticeConfig(int L, Site marked, Mode mode);

  int L() const { return L_; }
  std::size_t N() const { return N_; }
  Site marked() const { return marked_; }
  Mode mode() const { return mode_; }
  /// Number of amplitudes in a state for this configuration (N or 2N).
  std::size_t dimension() const { return mode_ == Mode::Ancilla ? 2 * N_ : N_; }

  LatticeConfig with_mode(Mode mode) const { return {L_, marked_, mode}; }

 private:
  int L_;
  std::size_t N_;
  Site marked_;
  Mode mode_;
};

LatticeConfig new_config(int L, Site marked = {0, 0}, Mode mode = Mode::Plain);

/// Local frame of the even-tiling plaquette block.
///
/// Reflected: the even plaquette's offsets run 0, -1 from its even-even
/// corner and carry -H_o in that frame. This is the staggered-fermion walk.
/// Transposed: the even block is the transpose of the odd block on
/// odd-odd-anchored plaquettes. It is kept as an alternative convention and
/// as a negative control for verification; it does not search.
enum class EvenFrame { Reflected, Transposed };

/// Kinetic parameters of the walk. tau is the evolution time of one walk
/// step and theta = t1 * tau the phase accumulated between oracle calls.
class WalkParams {
 public:
  WalkParams(double s, int t1, EvenFrame frame = EvenFrame::Reflected);

  double s() const { return s_; }
  double c() const { return c_; }
  double tau() const { return tau_; }
  int t1() const { return t1_; }
  double theta() const { return theta_; }
  EvenFrame even_frame() const { return frame_; }

 private:
  double s_;
  double c_;
  double tau_;
  int t1_;
  double theta_;
  EvenFrame frame_;
};

/// Real amplitudes over (ancilla sector x) lattice sites, flat index
/// a*N + x2*L + x1.
class StateVector {
 public:
  StateVector(Mode mode, int L);

  Mode mode() const { return mode_; }
  int L() const { return L_; }
  std::size_t N() const { return static_cast<std::size_t>(L_) * L_; }
  std::size_t size() const { return amplitudes_.size(); }

  std::span<double> amplitudes() { return amplitudes_; }
  std::span<const double> amplitudes() const { return amplitudes_; }

  /// One ancilla sector (a = 0 or 1). A plain state has a single sector 0
  /// covering the whole vector.
  std::span<double> sector(int a);
  std::span<const double> sector(int a) const;

  double& operator[](std::size_t i) { return amplitudes_[i]; }
  double operator[](std::size_t i) const { return amplitudes_[i]; }

  friend bool operator==(const StateVector&, const StateVector&) = default;

 private:
  Mode mode_;
  int L_;
  std::vector<double> amplitudes_;
};

StateVector uniform_state(const LatticeConfig& config);
StateVector zero_state(const LatticeConfig& config);
StateVector basis_state(const LatticeConfig& config, std::size_t index);

std::size_t site_index(const LatticeConfig& config, int x1, int x2,
                       std::optional<int> a = std::nullopt);

double norm(const StateVector& state);
double marked_probability(const StateVector& state, const LatticeConfig& config);
/// Squared overlap with |delta> (x) |marked>, |delta> = (sin delta, cos delta).
double projected_probability(const StateVector& state, const LatticeConfig& config,
                             double delta);

}  // namespace qwsearch
