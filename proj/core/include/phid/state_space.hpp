#ifndef PHID_STATE_SPACE_HPP
#define PHID_STATE_SPACE_HPP

#include <optional>

#include "phid/types.hpp"

namespace phid {

enum class ScalarField { Real, Complex };

/// Generalized state-space quintuple Z(s) = C (sE - A)^{-1} B + D with square
/// port dimension m. E defaults to the identity; descriptor E (e.g. a Loewner
/// matrix) is fully supported. Real models keep exactly-zero imaginary parts.
struct StateSpaceRealization {
  ComplexMatrix E;  ///< n x n
  ComplexMatrix A;  ///< n x n
  ComplexMatrix B;  ///< n x m
  ComplexMatrix C;  ///< m x n
  ComplexMatrix D;  ///< m x m
  ScalarField field = ScalarField::Real;

  Index n() const { return A.rows(); }
  Index m() const { return D.rows(); }
  bool is_real() const { return field == ScalarField::Real; }

  RealMatrix real_E() const { return E.real(); }
  RealMatrix real_A() const { return A.real(); }
  RealMatrix real_B() const { return B.real(); }
  RealMatrix real_C() const { return C.real(); }
  RealMatrix real_D() const { return D.real(); }

  /// True when E equals the identity to within tol * max(1, ||E||_1).
  bool has_identity_E(double tol = 1e-12) const;

  /// Throws InvalidInput on dimension inconsistency or on a complex entry in
  /// a model declared real.
  void check_consistent() const;

  static StateSpaceRealization real_model(const RealMatrix& A, const RealMatrix& B,
                                          const RealMatrix& C, const RealMatrix& D,
                                          const std::optional<RealMatrix>& E = std::nullopt);

  static StateSpaceRealization complex_model(const ComplexMatrix& A, const ComplexMatrix& B,
                                             const ComplexMatrix& C, const ComplexMatrix& D,
                                             const std::optional<ComplexMatrix>& E = std::nullopt);

  /// Static (n = 0) model Z(s) = D.
  static StateSpaceRealization static_model(const RealMatrix& D);
};

/// Degrees-of-freedom query for an m x m transfer function of MacMillan
/// degree n, either strictly proper or proper with rank(Z(inf)) = r.
struct DofQuery {
  enum class Kind { StrictlyProper, ProperWithRank };
  Index n = 0;
  Index m = 1;
  Kind kind = Kind::StrictlyProper;
  Index rank = 0;  ///< only meaningful for ProperWithRank; 0 <= rank <= m
};

/// Z(s) = C (sE - A)^{-1} B + D. Throws SingularPencil if sE - A is
/// numerically singular (s is a pole).
ComplexMatrix eval_transfer(const StateSpaceRealization& model, Complex s);

/// Spectral density Phi(s) = Z^T(-s) + Z(s); the Hermitian part of Z on the
/// imaginary axis for real models.
ComplexMatrix eval_phi(const StateSpaceRealization& model, Complex s);

/// Real parameter count: 2mn for strictly proper, 2m(n+r) - r^2 for proper
/// transfer functions with rank-r value at infinity.
long long dof_count(const DofQuery& q);

}  // namespace phid

#endif  // PHID_STATE_SPACE_HPP
