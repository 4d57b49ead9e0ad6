#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qwsearch/lattice.hpp"

namespace qwsearch {

struct VerifyOptions {
  /// Runs the plaquette kernel with EvenFrame::Transposed while the dense
  /// reference keeps the staggered walk. Dense checks must then fail.
  bool inject_convention_flip = false;
};

struct CheckResult {
  std::string name;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Dense-reference equivalence plus the invariant suite, at small L.
std::vector<CheckResult> run_verification(const VerifyOptions& options = {});

/// Unit-norm state with Gaussian amplitudes.
StateVector random_state(const LatticeConfig& config, std::mt19937_64& rng);

/// State translated by (d1, d2) with periodic wrap, per sector.
StateVector translated(const StateVector& state, int d1, int d2);

}  // namespace qwsearch
