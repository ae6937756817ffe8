#ifndef PHID_PH_FORM_HPP
#define PHID_PH_FORM_HPP

#include <vector>

#include "phid/state_space.hpp"
#include "phid/tangential.hpp"
#include "phid/types.hpp"

namespace phid {

/// Port-Hamiltonian coefficient set. The realization it encodes is
///   x' = (J - R) Q x + (G - P) u,  y = (G + P)^T Q x + (N + S) u,
/// with J, N skew-symmetric, [[R, P], [P^T, S]] symmetric positive
/// semidefinite and Q symmetric positive definite (identity in normalized
/// form).
struct PortHamiltonianForm {
  RealMatrix J;  ///< n x n, skew
  RealMatrix R;  ///< n x n, symmetric PSD block
  RealMatrix G;  ///< n x m
  RealMatrix P;  ///< n x m
  RealMatrix N;  ///< m x m, skew
  RealMatrix S;  ///< m x m, symmetric PSD block
  RealMatrix Q;  ///< n x n, symmetric PD

  Index n() const { return J.rows(); }
  Index m() const { return S.rows(); }

  /// Dissipation block [[R, P], [P^T, S]].
  RealMatrix W_block() const;

  bool is_normalized(double tol = 1e-12) const;

  /// Symmetry/positivity invariants; throws InvalidInput on violation.
  void check_invariants() const;
};

/// Upper-triangular Cholesky factor Gamma with Lhat = Gamma^T Gamma and
/// positive diagonal. Throws PickNotPositiveDefinite with the 1-based index
/// of the failing leading minor: the data cannot stem from a strictly
/// passive system.
RealMatrix pick_cholesky(const RealMatrix& Lhat);

/// Congruence by the Cholesky factor of E: (I, G^-T A G^-1, G^-T B, C G^-1, D).
/// Transfer function unchanged.
StateSpaceRealization normalize_realization(const StateSpaceRealization& model, const RealMatrix& Gamma);

/// Splits a real E = I realization into normalized port-Hamiltonian
/// coefficients: J = skew(A), R = -sym(A), G = (B + C^T)/2, P = (C^T - B)/2,
/// N = skew(D), S = sym(D), Q = I. Reconstruction is exact by construction.
/// Throws NotPassiveRealization when the dissipation block has an eigenvalue
/// below -1e-8 * ||W||.
PortHamiltonianForm extract_ph(const StateSpaceRealization& model);

/// Inverse of extract_ph: the state-space realization the coefficients encode.
StateSpaceRealization reconstruct(const PortHamiltonianForm& ph);

/// End-to-end construction of a normalized port-Hamiltonian realization from
/// right spectral-zero data and the value D at infinity: mirror the data to
/// the left side, build the symmetric Loewner pencil, realify, factor the
/// Pick matrix, and extract. The output interpolates the data and has
/// spectral zeros {lambda_j} U {-conj(lambda_j)}.
PortHamiltonianForm ph_from_spectral_data(const std::vector<RightDatum>& rights, const RealMatrix& D);

/// Port-Hamiltonian form of a strictly passive model via a certificate X:
/// factor X = T^T T, state transformation by T, then extract_ph. Throws
/// CertificateInvalid when the KYP matrix W(X, M) is not PSD within tolerance
/// and XNotPositiveDefinite when X is not PD.
PortHamiltonianForm from_certificate(const StateSpaceRealization& model, const RealMatrix& X);

}  // namespace phid

#endif  // PHID_PH_FORM_HPP
