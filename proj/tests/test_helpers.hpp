#ifndef PHID_TEST_HELPERS_HPP
#define PHID_TEST_HELPERS_HPP

#include <random>
#include <vector>

#include "phid/ph_form.hpp"
#include "phid/state_space.hpp"
#include "phid/types.hpp"

namespace phid::testing {

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a.size() == 0 ? 0.0 : (a - b).cwiseAbs().maxCoeff();
}

inline double max_abs_diff(const RealMatrix& a, const RealMatrix& b) {
  return a.size() == 0 ? 0.0 : (a - b).cwiseAbs().maxCoeff();
}

/// Largest relative transfer mismatch over the given evaluation points.
inline double max_rel_transfer_error(const StateSpaceRealization& a, const StateSpaceRealization& b,
                                     const std::vector<Complex>& points) {
  double worst = 0.0;
  for (Complex s : points) {
    const ComplexMatrix Za = eval_transfer(a, s);
    const ComplexMatrix Zb = eval_transfer(b, s);
    worst = std::max(worst, (Za - Zb).norm() / std::max(Zb.norm(), 1e-300));
  }
  return worst;
}

/// Log-spaced points on the positive imaginary axis, avoiding poles by
/// construction for the models used in the tests.
inline std::vector<Complex> imaginary_test_points(double lo, double hi, int count) {
  std::vector<Complex> pts;
  for (int i = 0; i < count; ++i) {
    const double t = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
    pts.emplace_back(0.0, lo * std::pow(hi / lo, t));
  }
  return pts;
}

inline RealMatrix random_matrix(std::mt19937& rng, Index rows, Index cols) {
  std::normal_distribution<double> dist(0.0, 1.0);
  RealMatrix M(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) M(i, j) = dist(rng);
  return M;
}

/// Random normalized port-Hamiltonian coefficients with a strictly positive
/// dissipation block: the reconstruction is strictly passive with X = I.
inline PortHamiltonianForm random_strictly_passive_ph(std::mt19937& rng, Index n, Index m) {
  const RealMatrix M0 = random_matrix(rng, n + m, n + m);
  const RealMatrix W = M0 * M0.transpose() + 0.3 * RealMatrix::Identity(n + m, n + m);
  const RealMatrix Jr = random_matrix(rng, n, n);
  const RealMatrix Nr = random_matrix(rng, m, m);

  PortHamiltonianForm ph;
  ph.J = 0.5 * (Jr - Jr.transpose());
  ph.R = W.topLeftCorner(n, n);
  ph.G = random_matrix(rng, n, m);
  ph.P = W.topRightCorner(n, m);
  ph.N = 0.5 * (Nr - Nr.transpose());
  ph.S = W.bottomRightCorner(m, m);
  ph.Q = RealMatrix::Identity(n, n);
  return ph;
}

}  // namespace phid::testing

#endif  // PHID_TEST_HELPERS_HPP
