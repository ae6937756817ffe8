#ifndef PHID_TYPES_HPP
#define PHID_TYPES_HPP

#include <complex>

#include <Eigen/Dense>

namespace phid {

using Index = Eigen::Index;
using Complex = std::complex<double>;

using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using ComplexRowVector = Eigen::RowVectorXcd;

/// Matrix 1-norm; tolerances throughout are relative to this scale.
template <typename Derived>
double norm1(const Eigen::MatrixBase<Derived>& m) {
  return m.rows() == 0 || m.cols() == 0 ? 0.0 : m.cwiseAbs().colwise().sum().maxCoeff();
}

/// max(1, ||m||_1): guards tolerances against degenerate all-zero operands.
template <typename Derived>
double norm1_scale(const Eigen::MatrixBase<Derived>& m) {
  return std::max(1.0, norm1(m));
}

}  // namespace phid

#endif  // PHID_TYPES_HPP
