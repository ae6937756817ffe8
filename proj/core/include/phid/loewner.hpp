#ifndef PHID_LOEWNER_HPP
#define PHID_LOEWNER_HPP

#include <utility>
#include <vector>

#include "phid/state_space.hpp"
#include "phid/tangential.hpp"
#include "phid/types.hpp"

namespace phid {

/// Loewner and shifted Loewner matrices of a tangential data set, together
/// with the stacked data they were built from. In symmetric (spectral-zero)
/// mode L is Hermitian and Ls skew-Hermitian by construction. After
/// realification the point matrices Lambda/Mu are real block diagonal and all
/// entries are real.
struct LoewnerPencil {
  ComplexMatrix L;       ///< n x n Loewner matrix
  ComplexMatrix Ls;      ///< n x n shifted Loewner matrix
  ComplexMatrix Lambda;  ///< n x n right points (diagonal, or 2x2-block real form)
  ComplexMatrix Mu;      ///< n x n left points
  ComplexMatrix Lrows;   ///< n x m stacked left directions
  ComplexMatrix Vrows;   ///< n x m stacked left values
  ComplexMatrix Rcols;   ///< m x n stacked right directions
  ComplexMatrix Wcols;   ///< m x n stacked right values
  TangentialDataSet data;  ///< provenance
  bool symmetric_mode = false;
  bool realified = false;

  Index n() const { return L.rows(); }
  Index m() const { return Rcols.rows(); }
};

/// Divided-difference construction of (L, Ls). Validates the data first;
/// throws PointCollision on lambda/mu collisions and InvalidTangentialData on
/// any other violation. symmetric_mode is set when the lefts were synthesized
/// from spectral-zero data.
LoewnerPencil build_pencil(const TangentialDataSet& ds);

/// Relative residuals of the two Sylvester identities the pencil satisfies by
/// construction; ~1e-15 for a freshly built pencil, O(1) for a corrupted one.
std::pair<double, double> sylvester_residual(const LoewnerPencil& p);

/// Theorem-2 interpolant: E = L, A = Ls - L_dirs D R, B = V - L_dirs D,
/// C = -W + D R. Requires L invertible (throws SingularLoewner). The result
/// matches every interpolation condition of the data and has Z(inf) = D.
StateSpaceRealization assemble_realization(const LoewnerPencil& p, const RealMatrix& D);

/// Which matrix the truncation SVD factors.
enum class SvdBasis {
  LoewnerOnly,  ///< SVD of L alone (default)
  Stacked       ///< row space of [L, Ls], column space of [L; Ls]
};

struct TruncationResult {
  StateSpaceRealization model;
  RealVector singular_values;  ///< all n singular values, descending
  Index order = 0;
};

/// Projects the Theorem-2 realization onto the dominant r singular directions
/// of the Loewner matrix, with r the smallest count whose trailing singular
/// value falls below rel_tol * sigma_1 (r = n when none does).
TruncationResult svd_truncate(const LoewnerPencil& p, const RealMatrix& D, double rel_tol,
                              SvdBasis basis = SvdBasis::LoewnerOnly);

}  // namespace phid

#endif  // PHID_LOEWNER_HPP
