#include "phid/passivity.hpp"

#include <limits>

#include <Eigen/Eigenvalues>

#include "phid/errors.hpp"

namespace phid {

namespace {

double lambda_min_sym(const RealMatrix& S) {
  if (S.rows() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(S, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

}  // namespace

RealMatrix kyp_matrix(const StateSpaceRealization& model, const RealMatrix& X) {
  if (!model.is_real()) throw InvalidInput("KYP matrix expects a real model");
  if (!model.has_identity_E()) throw DescriptorUnsupported("KYP matrix is defined for E = I models");
  const Index n = model.n();
  const Index m = model.m();
  if (X.rows() != n || X.cols() != n) throw InvalidInput("X must be n x n");
  if (norm1(RealMatrix(X - X.transpose())) > 1e-10 * norm1_scale(X))
    throw InvalidInput("X must be symmetric");

  const RealMatrix A = model.real_A();
  const RealMatrix B = model.real_B();
  const RealMatrix C = model.real_C();
  const RealMatrix D = model.real_D();

  RealMatrix W(n + m, n + m);
  const RealMatrix XA = X * A;  // A^T X = (XA)^T for symmetric X
  W.topLeftCorner(n, n) = -(XA + XA.transpose());
  const RealMatrix off = C.transpose() - X * B;
  W.topRightCorner(n, m) = off;
  W.bottomLeftCorner(m, n) = off.transpose();
  W.bottomRightCorner(m, m) = D + D.transpose();
  return W;
}

CertificateReport check_certificate(const StateSpaceRealization& model, const RealMatrix& X) {
  CertificateReport report;
  report.X = X;
  const RealMatrix W = kyp_matrix(model, X);
  report.lambda_min_X = lambda_min_sym(X);
  report.lambda_min_W = lambda_min_sym(W);

  const double tol_X = 1e-8 * norm1_scale(X);
  const double tol_W = 1e-8 * norm1_scale(W);
  if (report.lambda_min_X > tol_X && report.lambda_min_W > tol_W)
    report.verdict = CertificateReport::Verdict::Strict;
  else if (report.lambda_min_X >= -tol_X && report.lambda_min_W >= -tol_W)
    report.verdict = CertificateReport::Verdict::Nonstrict;
  else
    report.verdict = CertificateReport::Verdict::Invalid;
  return report;
}

std::vector<SweepPoint> positive_real_sweep(const StateSpaceRealization& model,
                                            const std::vector<double>& omegas) {
  std::vector<SweepPoint> out;
  out.reserve(omegas.size());
  for (double w : omegas) {
    SweepPoint pt;
    pt.omega = w;
    try {
      const ComplexMatrix Z = eval_transfer(model, Complex(0.0, w));
      const ComplexMatrix H = Z.adjoint() + Z;
      Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(H, Eigen::EigenvaluesOnly);
      pt.lambda_min = es.eigenvalues().minCoeff();
    } catch (const SingularPencil&) {
      pt.valid = false;
      pt.lambda_min = std::numeric_limits<double>::quiet_NaN();
    }
    out.push_back(pt);
  }
  return out;
}

double lambda_min_dissipation(const PortHamiltonianForm& ph) {
  return lambda_min_sym(ph.W_block());
}

}  // namespace phid
