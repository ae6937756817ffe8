#include "phid/loewner.hpp"

#include <limits>

#include <Eigen/LU>
#include <Eigen/SVD>

#include "phid/errors.hpp"

namespace phid {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

bool exactly_real(const ComplexMatrix& M) {
  return M.size() == 0 || M.imag().cwiseAbs().maxCoeff() == 0.0;
}

bool pencil_real(const LoewnerPencil& p) {
  return p.realified ||
         (exactly_real(p.L) && exactly_real(p.Ls) && exactly_real(p.Lrows) && exactly_real(p.Vrows) &&
          exactly_real(p.Rcols) && exactly_real(p.Wcols));
}

}  // namespace

LoewnerPencil build_pencil(const TangentialDataSet& ds) {
  const std::vector<Violation> violations = validate(ds);
  for (const Violation& v : violations)
    if (v.kind == Violation::Kind::PointCollision) throw PointCollision(v.detail);
  if (!violations.empty()) throw InvalidTangentialData(violations.front().detail);

  LoewnerPencil p;
  p.data = ds;
  p.symmetric_mode = ds.lefts_synthesized;
  p.Lambda = ds.Lambda();
  p.Mu = ds.Mu();
  p.Lrows = ds.Lmat();
  p.Vrows = ds.Vmat();
  p.Rcols = ds.Rmat();
  p.Wcols = ds.Wmat();

  const Index n = ds.n();
  p.L.resize(n, n);
  p.Ls.resize(n, n);
  for (Index i = 0; i < n; ++i) {
    const LeftDatum& left = ds.lefts[i];
    for (Index j = 0; j < n; ++j) {
      const RightDatum& right = ds.rights[j];
      const Complex lw = (left.ell * right.w).value();
      const Complex vr = (left.v * right.r).value();
      const Complex den = right.lambda - left.mu;
      p.L(i, j) = (lw - vr) / den;
      p.Ls(i, j) = (right.lambda * lw - left.mu * vr) / den;
    }
  }
  return p;
}

std::pair<double, double> sylvester_residual(const LoewnerPencil& p) {
  if (p.n() == 0) return {0.0, 0.0};

  const ComplexMatrix lhs1 = p.L * p.Lambda - p.Mu * p.L;
  const ComplexMatrix rhs1 = p.Lrows * p.Wcols - p.Vrows * p.Rcols;
  const double scale1 = std::max({norm1(lhs1), norm1(rhs1), 1e-300});
  const double res1 = norm1(ComplexMatrix(lhs1 - rhs1)) / scale1;

  const ComplexMatrix lhs2 = p.Ls * p.Lambda - p.Mu * p.Ls;
  const ComplexMatrix rhs2 = p.Lrows * p.Wcols * p.Lambda - p.Mu * p.Vrows * p.Rcols;
  const double scale2 = std::max({norm1(lhs2), norm1(rhs2), 1e-300});
  const double res2 = norm1(ComplexMatrix(lhs2 - rhs2)) / scale2;

  return {res1, res2};
}

StateSpaceRealization assemble_realization(const LoewnerPencil& p, const RealMatrix& D) {
  if (D.rows() != D.cols() || (p.m() > 0 && D.rows() != p.m()))
    throw InvalidInput("D dimension does not match the data's port dimension");
  if (p.n() == 0) return StateSpaceRealization::static_model(D);

  Eigen::PartialPivLU<ComplexMatrix> lu(p.L);
  if (lu.rcond() < kEps)
    throw SingularLoewner("Loewner matrix condition estimate exceeds 1/eps; interpolant not unique");

  const ComplexMatrix Dc = D.cast<Complex>();
  StateSpaceRealization out;
  out.E = p.L;
  out.A = p.Ls - p.Lrows * Dc * p.Rcols;
  out.B = p.Vrows - p.Lrows * Dc;
  out.C = -p.Wcols + Dc * p.Rcols;
  out.D = Dc;
  out.field = pencil_real(p) ? ScalarField::Real : ScalarField::Complex;
  if (out.field == ScalarField::Real) {
    out.E = out.E.real().cast<Complex>();
    out.A = out.A.real().cast<Complex>();
    out.B = out.B.real().cast<Complex>();
    out.C = out.C.real().cast<Complex>();
  }
  out.check_consistent();
  return out;
}

TruncationResult svd_truncate(const LoewnerPencil& p, const RealMatrix& D, double rel_tol,
                              SvdBasis basis) {
  if (!(rel_tol >= 0.0 && rel_tol < 1.0)) throw InvalidInput("rel_tol must lie in [0, 1)");

  TruncationResult out;
  const Index n = p.n();
  if (n == 0) {
    out.model = StateSpaceRealization::static_model(D);
    out.singular_values = RealVector(0);
    return out;
  }

  const ComplexMatrix Dc = D.cast<Complex>();
  const ComplexMatrix Afull = p.Ls - p.Lrows * Dc * p.Rcols;
  const ComplexMatrix Bfull = p.Vrows - p.Lrows * Dc;
  const ComplexMatrix Cfull = -p.Wcols + Dc * p.Rcols;

  const bool real_path = pencil_real(p);

  RealVector sv;
  ComplexMatrix Y, X;  // leading left/right singular vectors
  if (real_path) {
    const RealMatrix Lr = p.L.real();
    if (basis == SvdBasis::LoewnerOnly) {
      Eigen::BDCSVD<RealMatrix> svd(Lr, Eigen::ComputeThinU | Eigen::ComputeThinV);
      sv = svd.singularValues();
      Y = svd.matrixU().cast<Complex>();
      X = svd.matrixV().cast<Complex>();
    } else {
      RealMatrix H(n, 2 * n), V2(2 * n, n);
      H << Lr, p.Ls.real();
      V2 << Lr, p.Ls.real();
      Eigen::BDCSVD<RealMatrix> svd_h(H, Eigen::ComputeThinU);
      Eigen::BDCSVD<RealMatrix> svd_v(V2, Eigen::ComputeThinV);
      sv = svd_h.singularValues();
      Y = svd_h.matrixU().cast<Complex>();
      X = svd_v.matrixV().cast<Complex>();
    }
  } else {
    if (basis == SvdBasis::LoewnerOnly) {
      Eigen::BDCSVD<ComplexMatrix> svd(p.L, Eigen::ComputeThinU | Eigen::ComputeThinV);
      sv = svd.singularValues();
      Y = svd.matrixU();
      X = svd.matrixV();
    } else {
      ComplexMatrix H(n, 2 * n), V2(2 * n, n);
      H << p.L, p.Ls;
      V2 << p.L, p.Ls;
      Eigen::BDCSVD<ComplexMatrix> svd_h(H, Eigen::ComputeThinU);
      Eigen::BDCSVD<ComplexMatrix> svd_v(V2, Eigen::ComputeThinV);
      sv = svd_h.singularValues();
      Y = svd_h.matrixU();
      X = svd_v.matrixV();
    }
  }

  Index r = n;
  if (sv(0) == 0.0) {
    r = 0;
  } else {
    for (Index i = 1; i < sv.size(); ++i) {
      if (sv(i) / sv(0) <= rel_tol) {
        r = i;
        break;
      }
    }
    r = std::min(r, Y.cols());
  }

  const ComplexMatrix Yr = Y.leftCols(r);
  const ComplexMatrix Xr = X.leftCols(r);

  StateSpaceRealization mdl;
  mdl.E = Yr.adjoint() * p.L * Xr;
  mdl.A = Yr.adjoint() * Afull * Xr;
  mdl.B = Yr.adjoint() * Bfull;
  mdl.C = Cfull * Xr;
  mdl.D = Dc;
  mdl.field = real_path ? ScalarField::Real : ScalarField::Complex;
  if (real_path) {
    mdl.E = mdl.E.real().cast<Complex>();
    mdl.A = mdl.A.real().cast<Complex>();
    mdl.B = mdl.B.real().cast<Complex>();
    mdl.C = mdl.C.real().cast<Complex>();
  }
  mdl.check_consistent();

  out.model = std::move(mdl);
  out.singular_values = sv;
  out.order = r;
  return out;
}

}  // namespace phid
