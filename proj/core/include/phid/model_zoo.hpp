#ifndef PHID_MODEL_ZOO_HPP
#define PHID_MODEL_ZOO_HPP

#include <vector>

#include "phid/state_space.hpp"
#include "phid/types.hpp"

namespace phid {

/// Synthetic strictly passive RLC-style ladder with n = 2k states. Section j
/// is an internal resonator at a frequency filling [0.25, 300] log-uniformly
/// in bit-reversed order, chained to its neighbour; the dissipation profile
/// holds per-section relative damping ratios (scaled by the section
/// frequency). Built directly in normalized port-Hamiltonian form, so X = I
/// is a strict certificate whenever all ratios and d are positive.
struct LadderSpec {
  Index sections = 1;                ///< k >= 1; state dimension n = 2k
  std::vector<double> dissipation;   ///< k positive damping ratios
  double feedthrough = 1.0;          ///< d > 0

  /// Default profile 0.05 + 0.15 * i/k, i = 1..k.
  static LadderSpec with_defaults(Index k);

  void check() const;  ///< throws InvalidInput on a malformed spec
};

/// 2x2 example Z(s) = d I - (s I - A)^{-1} with A = [[a, b], [-b, a]];
/// poles a +- ib, strictly passive for a < 0 < d (suitably sized).
StateSpaceRealization make_analytic(double a, double b, double d);

/// The 5-state single-port RLC circuit with tridiagonal-style A (entries
/// +-10, -20, -2), B = 20 e1, C = -2 e1^T, D = 2.
StateSpaceRealization make_rlc5();

/// Builds the ladder in port-Hamiltonian coordinates and reconstructs it.
StateSpaceRealization make_ladder(const LadderSpec& spec);

}  // namespace phid

#endif  // PHID_MODEL_ZOO_HPP
