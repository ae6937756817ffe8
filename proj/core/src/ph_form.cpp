#include "phid/ph_form.hpp"

#include <cmath>
#include <string>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include "phid/errors.hpp"
#include "phid/loewner.hpp"
#include "phid/passivity.hpp"
#include "phid/realify.hpp"

namespace phid {

namespace {

// Textbook upper Cholesky, kept by hand so the failing leading minor can be
// reported. Returns the 1-based failing minor, or 0 on success.
std::size_t upper_cholesky(const RealMatrix& S, RealMatrix& Gamma) {
  const Index n = S.rows();
  Gamma = RealMatrix::Zero(n, n);
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i <= j; ++i) {
      double s = S(i, j);
      for (Index k = 0; k < i; ++k) s -= Gamma(k, i) * Gamma(k, j);
      if (i == j) {
        if (!(s > 0.0)) return static_cast<std::size_t>(j + 1);
        Gamma(j, j) = std::sqrt(s);
      } else {
        Gamma(i, j) = s / Gamma(i, i);
      }
    }
  }
  return 0;
}

double lambda_min_sym(const RealMatrix& S) {
  if (S.rows() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(S, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

void require_symmetric(const RealMatrix& S, const char* name, double rel_tol = 1e-12) {
  if (S.rows() != S.cols() || norm1(RealMatrix(S - S.transpose())) > rel_tol * norm1_scale(S))
    throw InvalidInput(std::string(name) + " must be symmetric");
}

// G^-T M G^-1 for upper-triangular G.
RealMatrix congruence_inv(const RealMatrix& G, const RealMatrix& M) {
  RealMatrix Y = G.transpose().triangularView<Eigen::Lower>().solve(M);
  return G.triangularView<Eigen::Upper>().solve<Eigen::OnTheRight>(Y);
}

}  // namespace

RealMatrix PortHamiltonianForm::W_block() const {
  RealMatrix W(n() + m(), n() + m());
  W.topLeftCorner(n(), n()) = R;
  W.topRightCorner(n(), m()) = P;
  W.bottomLeftCorner(m(), n()) = P.transpose();
  W.bottomRightCorner(m(), m()) = S;
  return W;
}

bool PortHamiltonianForm::is_normalized(double tol) const {
  return norm1(RealMatrix(Q - RealMatrix::Identity(n(), n()))) <= tol * norm1_scale(Q);
}

void PortHamiltonianForm::check_invariants() const {
  if (J.cols() != n() || R.rows() != n() || R.cols() != n() || Q.rows() != n() || Q.cols() != n())
    throw InvalidInput("port-Hamiltonian state blocks must be n x n");
  if (G.rows() != n() || G.cols() != m() || P.rows() != n() || P.cols() != m())
    throw InvalidInput("G and P must be n x m");
  if (N.rows() != m() || N.cols() != m() || S.cols() != m())
    throw InvalidInput("N and S must be m x m");
  if (norm1(RealMatrix(J + J.transpose())) > 1e-12 * norm1_scale(J))
    throw InvalidInput("J must be skew-symmetric");
  if (norm1(RealMatrix(N + N.transpose())) > 1e-12 * norm1_scale(N))
    throw InvalidInput("N must be skew-symmetric");
  require_symmetric(R, "R");
  require_symmetric(S, "S");
  require_symmetric(Q, "Q");
  const RealMatrix W = W_block();
  if (lambda_min_sym(W) < -1e-10 * norm1_scale(W))
    throw InvalidInput("dissipation block [[R, P], [P^T, S]] is not positive semidefinite");
  if (n() > 0 && lambda_min_sym(Q) <= 0.0)
    throw InvalidInput("Q must be positive definite");
}

RealMatrix pick_cholesky(const RealMatrix& Lhat) {
  require_symmetric(Lhat, "Pick matrix");
  RealMatrix Gamma;
  const std::size_t minor = upper_cholesky(Lhat, Gamma);
  if (minor != 0)
    throw PickNotPositiveDefinite(minor, "Pick matrix fails at leading minor " + std::to_string(minor) +
                                             "; data inconsistent with a strictly passive system");
  return Gamma;
}

StateSpaceRealization normalize_realization(const StateSpaceRealization& model, const RealMatrix& Gamma) {
  if (!model.is_real()) throw InvalidInput("normalization expects a real (realified) model");
  const Index n = model.n();
  if (Gamma.rows() != n || Gamma.cols() != n) throw InvalidInput("Gamma must be n x n");
  const RealMatrix E = model.real_E();
  if (norm1(RealMatrix(Gamma.transpose() * Gamma - E)) > 1e-8 * norm1_scale(E))
    throw InvalidInput("Gamma is not a Cholesky factor of the model's E");

  const RealMatrix An = congruence_inv(Gamma, model.real_A());
  const RealMatrix Bn = Gamma.transpose().triangularView<Eigen::Lower>().solve(model.real_B());
  const RealMatrix Cn = Gamma.triangularView<Eigen::Upper>().solve<Eigen::OnTheRight>(model.real_C());
  return StateSpaceRealization::real_model(An, Bn, Cn, model.real_D());
}

PortHamiltonianForm extract_ph(const StateSpaceRealization& model) {
  if (!model.is_real()) throw InvalidInput("extraction expects a real model");
  if (!model.has_identity_E()) throw DescriptorUnsupported("extraction expects E = I");

  const RealMatrix A = model.real_A();
  const RealMatrix B = model.real_B();
  const RealMatrix C = model.real_C();
  const RealMatrix D = model.real_D();

  PortHamiltonianForm ph;
  ph.J = 0.5 * (A - A.transpose());
  ph.R = -0.5 * (A + A.transpose());
  ph.G = 0.5 * (B + C.transpose());
  ph.P = 0.5 * (C.transpose() - B);
  ph.N = 0.5 * (D - D.transpose());
  ph.S = 0.5 * (D + D.transpose());
  ph.Q = RealMatrix::Identity(model.n(), model.n());

  const RealMatrix W = ph.W_block();
  const double lmin = lambda_min_sym(W);
  if (lmin < -1e-8 * norm1(W))
    throw NotPassiveRealization("dissipation block has eigenvalue " + std::to_string(lmin) +
                                "; realization is not passive");
  return ph;
}

StateSpaceRealization reconstruct(const PortHamiltonianForm& ph) {
  const RealMatrix A = (ph.J - ph.R) * ph.Q;
  const RealMatrix B = ph.G - ph.P;
  const RealMatrix C = (ph.G + ph.P).transpose() * ph.Q;
  const RealMatrix D = ph.N + ph.S;
  return StateSpaceRealization::real_model(A, B, C, D);
}

PortHamiltonianForm ph_from_spectral_data(const std::vector<RightDatum>& rights, const RealMatrix& D) {
  const Index m = D.rows();
  if (D.cols() != m || m < 1) throw InvalidInput("D must be square with m >= 1");
  const RealMatrix Dsym = D + D.transpose();
  if (lambda_min_sym(Dsym) <= 1e-12 * norm1_scale(Dsym))
    throw DNotStrictlyPositiveReal("D + D^T must be positive definite");

  if (rights.empty()) {
    PortHamiltonianForm ph;
    ph.J = ph.R = ph.Q = RealMatrix::Zero(0, 0);
    ph.G = ph.P = RealMatrix::Zero(0, m);
    ph.N = 0.5 * (D - D.transpose());
    ph.S = 0.5 * (D + D.transpose());
    return ph;
  }
  if (rights.front().r.size() != m)
    throw InvalidInput("direction length does not match D's dimension");

  TangentialDataSet ds = left_from_spectral(rights);
  ds.D = D;
  const LoewnerPencil pencil = build_pencil(ds);
  const RealifierMap map = build_realifier(ds);
  const LoewnerPencil real_pencil = realify_pencil(pencil, map);

  const RealMatrix Gamma = pick_cholesky(real_pencil.L.real());

  // Assemble directly from the Gamma-transformed pencil pieces. This equals
  // normalize_realization(assemble_realization(...), Gamma) but keeps the
  // skew part of the shifted Loewner matrix exact through the congruence, so
  // the extracted dissipation block has exact rank <= m.
  RealMatrix K = congruence_inv(Gamma, real_pencil.Ls.real());
  K = 0.5 * (K - K.transpose()).eval();
  const RealMatrix Rg = Gamma.triangularView<Eigen::Upper>().solve<Eigen::OnTheRight>(
      RealMatrix(real_pencil.Rcols.real()));
  const RealMatrix Wg = Gamma.triangularView<Eigen::Upper>().solve<Eigen::OnTheRight>(
      RealMatrix(real_pencil.Wcols.real()));

  const RealMatrix An = K - Rg.transpose() * D * Rg;
  const RealMatrix Bn = -Wg.transpose() - Rg.transpose() * D;
  const RealMatrix Cn = -Wg + D * Rg;

  return extract_ph(StateSpaceRealization::real_model(An, Bn, Cn, D));
}

PortHamiltonianForm from_certificate(const StateSpaceRealization& model, const RealMatrix& X) {
  if (!model.is_real()) throw InvalidInput("certificate transformation expects a real model");
  require_symmetric(X, "certificate X", 1e-10);

  RealMatrix T;
  const std::size_t minor = upper_cholesky(X, T);
  if (minor != 0)
    throw XNotPositiveDefinite("X fails at leading minor " + std::to_string(minor));

  const RealMatrix W = kyp_matrix(model, X);
  const double lmin = lambda_min_sym(W);
  if (lmin < -1e-8 * norm1_scale(W))
    throw CertificateInvalid("KYP matrix W(X, M) has eigenvalue " + std::to_string(lmin) +
                             "; X does not certify passivity");

  const RealMatrix At =
      T.triangularView<Eigen::Upper>().solve<Eigen::OnTheRight>(RealMatrix(T * model.real_A()));
  const RealMatrix Bt = T * model.real_B();
  const RealMatrix Ct = T.triangularView<Eigen::Upper>().solve<Eigen::OnTheRight>(model.real_C());
  return extract_ph(StateSpaceRealization::real_model(At, Bt, Ct, model.real_D()));
}

}  // namespace phid
