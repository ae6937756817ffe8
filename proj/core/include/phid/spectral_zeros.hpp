#ifndef PHID_SPECTRAL_ZEROS_HPP
#define PHID_SPECTRAL_ZEROS_HPP

#include <string>
#include <vector>

#include "phid/state_space.hpp"
#include "phid/tangential.hpp"
#include "phid/types.hpp"

namespace phid {

/// Spectral zeros lambda_j with unit zero directions r_j, Phi(lambda_j) r_j = 0.
/// Directions are phase-normalized: the entry of largest modulus is real and
/// nonnegative (lowest index on ties). Every stored pair has passed the
/// residual certificate ||Phi(lambda) r|| <= 1e-8 * max(1, ||Phi(lambda)||_1).
struct SpectralZeroSet {
  std::vector<Complex> zeros;
  std::vector<ComplexVector> directions;
  std::string source;  ///< provenance tag (model identity)

  std::size_t size() const { return zeros.size(); }
};

/// All finite zeros of the spectral density Phi(s) = Z^T(-s) + Z(s), computed
/// as the finite eigenvalues of the even pencil
///   [[A, 0, B], [0, -A^T, -C^T], [C, B^T, D+D^T]] - s blkdiag(E, E^T, 0),
/// with the zero direction read off the trailing m entries of the right
/// eigenvector. Eigenvalues whose trailing block vanishes, or which sit on a
/// pole of Z, are artifacts of non-minimality and are discarded. Throws
/// SingularEvenPencil and ResidualCheckFailed.
SpectralZeroSet compute_spectral_zeros(const StateSpaceRealization& model);

/// Keeps the open-right-half-plane zeros in canonical order (real zeros first
/// ascending, conjugate pairs by (|Im|, Re), +Im first). Throws
/// UnexpectedZeroCount when a zero lies on (numerically: within
/// 1e-8 * (1+|lambda|) of) the imaginary axis or the count differs from
/// n_expected.
SpectralZeroSet filter_rhp(const SpectralZeroSet& zs, Index n_expected);

/// Right tangential data at the model's right-half-plane spectral zeros:
/// w_j = Z(lambda_j) r_j, conjugate-closed and canonically ordered.
std::vector<RightDatum> spectral_data_from_model(const StateSpaceRealization& model, Index n);

}  // namespace phid

#endif  // PHID_SPECTRAL_ZEROS_HPP
