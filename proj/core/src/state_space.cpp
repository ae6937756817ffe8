#include "phid/state_space.hpp"

#include <limits>

#include <Eigen/LU>

#include "phid/errors.hpp"

namespace phid {

namespace {
constexpr double kEps = std::numeric_limits<double>::epsilon();
}

bool StateSpaceRealization::has_identity_E(double tol) const {
  if (E.rows() != n() || E.cols() != n()) return false;
  ComplexMatrix diff = E - ComplexMatrix::Identity(n(), n());
  return norm1(diff) <= tol * norm1_scale(E);
}

void StateSpaceRealization::check_consistent() const {
  const Index nn = A.rows();
  const Index mm = D.rows();
  if (A.cols() != nn) throw InvalidInput("A must be square");
  if (E.rows() != nn || E.cols() != nn) throw InvalidInput("E must be n x n");
  if (B.rows() != nn || B.cols() != mm) throw InvalidInput("B must be n x m");
  if (C.rows() != mm || C.cols() != nn) throw InvalidInput("C must be m x n");
  if (D.cols() != mm) throw InvalidInput("D must be square");
  if (mm < 1) throw InvalidInput("port dimension m must be at least 1");
  if (field == ScalarField::Real) {
    for (const ComplexMatrix* M : {&E, &A, &B, &C, &D}) {
      if (M->size() > 0 && M->imag().cwiseAbs().maxCoeff() != 0.0)
        throw InvalidInput("real model carries nonzero imaginary entries");
    }
  }
}

StateSpaceRealization StateSpaceRealization::real_model(const RealMatrix& A, const RealMatrix& B,
                                                        const RealMatrix& C, const RealMatrix& D,
                                                        const std::optional<RealMatrix>& E) {
  StateSpaceRealization out;
  out.A = A.cast<Complex>();
  out.B = B.cast<Complex>();
  out.C = C.cast<Complex>();
  out.D = D.cast<Complex>();
  out.E = E ? E->cast<Complex>().eval() : ComplexMatrix::Identity(A.rows(), A.rows()).eval();
  out.field = ScalarField::Real;
  out.check_consistent();
  return out;
}

StateSpaceRealization StateSpaceRealization::complex_model(const ComplexMatrix& A, const ComplexMatrix& B,
                                                           const ComplexMatrix& C, const ComplexMatrix& D,
                                                           const std::optional<ComplexMatrix>& E) {
  StateSpaceRealization out;
  out.A = A;
  out.B = B;
  out.C = C;
  out.D = D;
  out.E = E ? *E : ComplexMatrix::Identity(A.rows(), A.rows());
  out.field = ScalarField::Complex;
  out.check_consistent();
  return out;
}

StateSpaceRealization StateSpaceRealization::static_model(const RealMatrix& D) {
  return real_model(RealMatrix::Zero(0, 0), RealMatrix::Zero(0, D.rows()),
                    RealMatrix::Zero(D.rows(), 0), D);
}

ComplexMatrix eval_transfer(const StateSpaceRealization& model, Complex s) {
  if (model.n() == 0) return model.D;
  ComplexMatrix pencil = s * model.E - model.A;
  Eigen::PartialPivLU<ComplexMatrix> lu(pencil);
  if (lu.rcond() < kEps)
    throw SingularPencil("sE - A is numerically singular at the evaluation point");
  return model.C * lu.solve(model.B) + model.D;
}

ComplexMatrix eval_phi(const StateSpaceRealization& model, Complex s) {
  return eval_transfer(model, -s).transpose() + eval_transfer(model, s);
}

long long dof_count(const DofQuery& q) {
  if (q.n < 0 || q.m < 1) throw InvalidInput("dof query requires n >= 0 and m >= 1");
  const long long n = q.n;
  const long long m = q.m;
  if (q.kind == DofQuery::Kind::StrictlyProper) return 2 * m * n;
  const long long r = q.rank;
  if (r < 0 || r > m) throw InvalidInput("dof query requires 0 <= rank <= m");
  return 2 * m * (n + r) - r * r;
}

}  // namespace phid
