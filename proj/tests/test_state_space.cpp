#include <doctest.h>

#include <cmath>
#include <random>

#include "phid/errors.hpp"
#include "phid/state_space.hpp"
#include "test_helpers.hpp"

using namespace phid;
using namespace phid::testing;

namespace {

StateSpaceRealization scalar_model() {
  RealMatrix one(1, 1);
  one << 1.0;
  RealMatrix A(1, 1);
  A << -1.0;
  return StateSpaceRealization::real_model(A, one, one, one);
}

// Independent oracle for the scalar model: partial fractions of 1 + 1/(s+1).
Complex scalar_oracle(Complex s) { return 1.0 + 1.0 / (s + 1.0); }

StateSpaceRealization analytic22() {
  RealMatrix A(2, 2);
  A << -1, 1, -1, -1;
  return StateSpaceRealization::real_model(A, RealMatrix::Identity(2, 2), -RealMatrix::Identity(2, 2),
                                           2.0 * RealMatrix::Identity(2, 2));
}

}  // namespace

TEST_CASE("eval_transfer matches the partial-fraction oracle on the scalar model") {
  const StateSpaceRealization m = scalar_model();
  const double rt2 = std::sqrt(2.0);
  CHECK(std::abs(eval_transfer(m, Complex(rt2, 0.0))(0, 0) - scalar_oracle(rt2)) < 1e-14);
  CHECK(std::abs(eval_transfer(m, Complex(rt2, 0.0))(0, 0) - rt2) < 1e-14);
  for (Complex s : {Complex(0.3, 1.7), Complex(2.0, -0.5), Complex(0.0, 10.0)})
    CHECK(std::abs(eval_transfer(m, s)(0, 0) - scalar_oracle(s)) < 1e-13);
}

TEST_CASE("eval_transfer returns D when B = 0") {
  RealMatrix A(2, 2);
  A << -1, 0, 0, -2;
  RealMatrix D(2, 2);
  D << 3, 1, 0, 4;
  const auto m = StateSpaceRealization::real_model(A, RealMatrix::Zero(2, 2), RealMatrix::Identity(2, 2), D);
  CHECK(max_abs_diff(eval_transfer(m, Complex(0.7, 2.0)), D.cast<Complex>()) == 0.0);
}

TEST_CASE("eval_transfer on the analytic 2x2 model at s = 0") {
  ComplexMatrix expected(2, 2);
  expected << 1.5, -0.5, 0.5, 1.5;  // 2I + A^{-1}, inverted by hand
  CHECK(max_abs_diff(eval_transfer(analytic22(), Complex(0.0, 0.0)), expected) < 1e-14);
}

TEST_CASE("eval_transfer throws SingularPencil at a pole") {
  CHECK_THROWS_AS(eval_transfer(scalar_model(), Complex(-1.0, 0.0)), SingularPencil);
}

TEST_CASE("eval_phi zeros and values of the scalar model") {
  const StateSpaceRealization m = scalar_model();
  CHECK(std::abs(eval_phi(m, Complex(0.0, 0.0))(0, 0) - 4.0) < 1e-14);
  // analytic solve of 2 + 2/(1 - s^2) = 0 puts the zeros at +-sqrt(2)
  CHECK(std::abs(eval_phi(m, Complex(std::sqrt(2.0), 0.0))(0, 0)) < 1e-12);
  CHECK(std::abs(eval_phi(m, Complex(-std::sqrt(2.0), 0.0))(0, 0)) < 1e-12);
}

TEST_CASE("eval_phi is constant 2I for B = 0, D = I") {
  RealMatrix A(2, 2);
  A << -1, 0.5, 0, -2;
  const auto m = StateSpaceRealization::real_model(A, RealMatrix::Zero(2, 2), RealMatrix::Identity(2, 2),
                                                   RealMatrix::Identity(2, 2));
  for (Complex s : {Complex(0.0, 0.0), Complex(1.0, 3.0), Complex(0.0, -7.0)})
    CHECK(max_abs_diff(eval_phi(m, s), ComplexMatrix(2.0 * ComplexMatrix::Identity(2, 2))) < 1e-14);
}

TEST_CASE("conjugate symmetry of real models") {
  std::mt19937 rng(101);
  for (int trial = 0; trial < 20; ++trial) {
    const Index n = 1 + static_cast<Index>(rng() % 6);
    const Index mdim = 1 + static_cast<Index>(rng() % 3);
    const auto model = reconstruct(random_strictly_passive_ph(rng, n, mdim));
    const Complex s(0.4, 1.3);
    const ComplexMatrix Z = eval_transfer(model, s);
    const ComplexMatrix Zc = eval_transfer(model, std::conj(s));
    CHECK(max_abs_diff(Zc, Z.conjugate()) <= 1e-12 * std::max(1.0, norm1(Z)));
  }
}

TEST_CASE("phi equals the Hermitian part of Z on the imaginary axis") {
  std::mt19937 rng(202);
  for (int trial = 0; trial < 20; ++trial) {
    const Index n = 1 + static_cast<Index>(rng() % 6);
    const auto model = reconstruct(random_strictly_passive_ph(rng, n, 2));
    const double w = 0.1 + 5.0 * static_cast<double>(rng() % 100) / 100.0;
    const ComplexMatrix Z = eval_transfer(model, Complex(0.0, w));
    const ComplexMatrix phi = eval_phi(model, Complex(0.0, w));
    CHECK((phi - (Z.adjoint() + Z)).norm() <= 1e-12 * std::max(1.0, Z.norm()));
  }
}

TEST_CASE("dof_count reproduces the closed forms") {
  CHECK(dof_count({5, 1, DofQuery::Kind::StrictlyProper, 0}) == 10);
  CHECK(dof_count({5, 2, DofQuery::Kind::ProperWithRank, 2}) == 24);
  CHECK(dof_count({0, 3, DofQuery::Kind::ProperWithRank, 0}) == 0);

  std::mt19937 rng(303);
  for (int trial = 0; trial < 50; ++trial) {
    const Index n = static_cast<Index>(rng() % 40);
    const Index m = 1 + static_cast<Index>(rng() % 5);
    CHECK(dof_count({n, m, DofQuery::Kind::ProperWithRank, 0}) ==
          dof_count({n, m, DofQuery::Kind::StrictlyProper, 0}));
    const Index r = static_cast<Index>(rng() % (m + 1));
    CHECK(dof_count({n, m, DofQuery::Kind::ProperWithRank, r}) == 2 * m * (n + r) - r * r);
  }
}

TEST_CASE("model construction validates dimensions") {
  RealMatrix A(2, 2);
  A << -1, 0, 0, -1;
  CHECK_THROWS_AS(StateSpaceRealization::real_model(A, RealMatrix::Zero(3, 1), RealMatrix::Zero(1, 2),
                                                    RealMatrix::Identity(1, 1)),
                  InvalidInput);
}
