#ifndef PHID_REALIFY_HPP
#define PHID_REALIFY_HPP

#include <vector>

#include "phid/loewner.hpp"
#include "phid/tangential.hpp"
#include "phid/types.hpp"

namespace phid {

/// Block-diagonal unitary transformations that turn self-conjugate data into
/// real data: a 1-block on each real point and Q = (1/sqrt 2) [[1, -i],[1, i]]
/// on each adjacent conjugate pair. The right transformation acts on the
/// lambda side, the left one on the mu side; they coincide in symmetric
/// (spectral-zero) mode.
struct RealifierMap {
  enum class Block { RealPoint, ConjugatePair };
  std::vector<Block> right_blocks;
  std::vector<Block> left_blocks;
  ComplexMatrix U_right;  ///< n x n unitary
  ComplexMatrix U_left;   ///< n x n unitary
};

/// Derives the block structure from the canonical ordering of ds. Throws
/// NotSelfConjugate when a complex point is not adjacent to its partner with
/// the +Im member first.
RealifierMap build_realifier(const TangentialDataSet& ds);

/// U_left^H (L, Ls) U_right and the matching data transformations; the result
/// carries exactly-real entries. Throws NotSelfConjugate if any imaginary
/// residue exceeds 1e-10 in absolute value (data not actually self-conjugate).
LoewnerPencil realify_pencil(const LoewnerPencil& p, const RealifierMap& map);

}  // namespace phid

#endif  // PHID_REALIFY_HPP
