#ifndef PHID_TANGENTIAL_HPP
#define PHID_TANGENTIAL_HPP

#include <string>
#include <vector>

#include "phid/types.hpp"

namespace phid {

/// Right tangential interpolation condition Z(lambda) r = w.
struct RightDatum {
  Complex lambda;
  ComplexVector r;  ///< m x 1, nonzero
  ComplexVector w;  ///< m x 1
};

/// Left tangential interpolation condition ell Z(mu) = v.
struct LeftDatum {
  Complex mu;
  ComplexRowVector ell;  ///< 1 x m, nonzero
  ComplexRowVector v;    ///< 1 x m
};

/// Relative tolerance for deciding that two points / vectors are conjugate
/// partners. Measured data carry noise; exact equality would be brittle.
inline constexpr double kConjugateTol = 1e-10;

/// True when |Im(z)| is below the conjugate-matching tolerance.
bool is_real_point(Complex z, double tol = kConjugateTol);

struct Violation {
  enum class Kind { MissingConjugate, PointCollision, DimensionMismatch, DuplicatePoint, ZeroDirection };
  Kind kind;
  std::string detail;
};

/// Matched left/right interpolation data with the canonical ordering:
/// real points first (ascending), then conjugate pairs by (|Im|, Re) with the
/// +Im member first. D is the value at infinity (zero when not yet known).
struct TangentialDataSet {
  std::vector<RightDatum> rights;
  std::vector<LeftDatum> lefts;
  RealMatrix D;  ///< m x m
  Index m = 0;
  bool lefts_synthesized = false;  ///< lefts mirror spectral-zero rights (symmetric mode)

  Index n() const { return static_cast<Index>(rights.size()); }

  // Stacked forms: Lambda = diag(lambda_j), Mu = diag(mu_i), L/V rows are
  // ell_i/v_i, R/W columns are r_j/w_j.
  ComplexMatrix Lambda() const;
  ComplexMatrix Mu() const;
  ComplexMatrix Lmat() const;
  ComplexMatrix Vmat() const;
  ComplexMatrix Rmat() const;
  ComplexMatrix Wmat() const;
};

/// Completes a set of right data to a self-conjugate set in canonical order.
/// Idempotent; the same input multiset always yields the same output order.
std::vector<RightDatum> conjugate_closure(const std::vector<RightDatum>& rights);
std::vector<LeftDatum> conjugate_closure(const std::vector<LeftDatum>& lefts);

/// Builds the paired data set for spectral-zero interpolation:
/// mu_j = -conj(lambda_j), ell_j = r_j^H, v_j = -w_j^H. Requires a
/// self-conjugate right set with Re(lambda) > 0 (throws InvalidSpectralData).
TangentialDataSet left_from_spectral(const std::vector<RightDatum>& rights);

/// Diagnostic validation; returns one record per broken invariant and never
/// throws. An empty result means the set is ready for pencil construction.
std::vector<Violation> validate(const TangentialDataSet& ds);

}  // namespace phid

#endif  // PHID_TANGENTIAL_HPP
