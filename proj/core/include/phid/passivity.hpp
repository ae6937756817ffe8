#ifndef PHID_PASSIVITY_HPP
#define PHID_PASSIVITY_HPP

#include <vector>

#include "phid/ph_form.hpp"
#include "phid/state_space.hpp"
#include "phid/types.hpp"

namespace phid {

/// Outcome of testing a candidate certificate X against the KYP inequality.
struct CertificateReport {
  RealMatrix X;
  double lambda_min_X = 0.0;
  double lambda_min_W = 0.0;
  enum class Verdict { Strict, Nonstrict, Invalid } verdict = Verdict::Invalid;
};

/// KYP matrix W(X, M) = [[-A^T X - X A, C^T - X B], [C - B^T X, D + D^T]].
/// Exactly symmetric by construction (off-diagonal blocks averaged). Requires
/// E = I (throws DescriptorUnsupported) and symmetric X.
RealMatrix kyp_matrix(const StateSpaceRealization& model, const RealMatrix& X);

/// Eigenvalue-based verdict: strict iff both X and W(X, M) are PD beyond the
/// scaled tolerance, nonstrict iff both are PSD within it, invalid otherwise.
CertificateReport check_certificate(const StateSpaceRealization& model, const RealMatrix& X);

struct SweepPoint {
  double omega = 0.0;
  double lambda_min = 0.0;
  bool valid = true;  ///< false when omega hit a pole and the point was skipped
};

/// Smallest eigenvalue of Z(iw)^H + Z(iw) per frequency; everywhere positive
/// is the strict positive-realness indicator. Pole hits are flagged, not fatal.
std::vector<SweepPoint> positive_real_sweep(const StateSpaceRealization& model,
                                            const std::vector<double>& omegas);

/// Smallest eigenvalue of the dissipation block [[R, P], [P^T, S]]; the
/// normalized-form robustness proxy.
double lambda_min_dissipation(const PortHamiltonianForm& ph);

}  // namespace phid

#endif  // PHID_PASSIVITY_HPP
