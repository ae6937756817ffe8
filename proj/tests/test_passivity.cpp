#include <doctest.h>

#include <cmath>
#include <random>

#include "phid/errors.hpp"
#include "phid/model_zoo.hpp"
#include "phid/passivity.hpp"
#include "phid/ph_form.hpp"
#include "test_helpers.hpp"

using namespace phid;
using namespace phid::testing;

namespace {

StateSpaceRealization scalar_normalized() {
  const double rt2 = std::sqrt(2.0);
  RealMatrix A(1, 1), B(1, 1), C(1, 1), D(1, 1);
  A << -1.0;
  B << -rt2 - 1.0;
  C << 1.0 - rt2;
  D << 1.0;
  return StateSpaceRealization::real_model(A, B, C, D);
}

}  // namespace

TEST_CASE("kyp_matrix of the scalar normalized model") {
  const RealMatrix W = kyp_matrix(scalar_normalized(), RealMatrix::Identity(1, 1));
  RealMatrix expected(2, 2);
  expected << 2, 2, 2, 2;
  CHECK(max_abs_diff(W, expected) < 1e-14);
}

TEST_CASE("kyp_matrix of a decoupled model") {
  RealMatrix A = -RealMatrix::Identity(2, 2);
  const auto model = StateSpaceRealization::real_model(A, RealMatrix::Zero(2, 2),
                                                       RealMatrix::Zero(2, 2),
                                                       RealMatrix::Identity(2, 2));
  const RealMatrix W = kyp_matrix(model, RealMatrix::Identity(2, 2));
  RealMatrix expected = 2.0 * RealMatrix::Identity(4, 4);
  CHECK(max_abs_diff(W, expected) == 0.0);
}

TEST_CASE("kyp_matrix requires E = I") {
  RealMatrix A(1, 1), B(1, 1), C(1, 1), D(1, 1), E(1, 1);
  A << -1;
  B << 1;
  C << 1;
  D << 1;
  E << 2;
  const auto model = StateSpaceRealization::real_model(A, B, C, D, E);
  CHECK_THROWS_AS(kyp_matrix(model, RealMatrix::Identity(1, 1)), DescriptorUnsupported);
}

TEST_CASE("kyp identity: W(I) equals twice the dissipation block") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const Index n = 1 + static_cast<Index>(rng() % 6);
    const Index m = 1 + static_cast<Index>(rng() % 3);
    const auto ph = random_strictly_passive_ph(rng, n, m);
    const RealMatrix W = kyp_matrix(reconstruct(ph), RealMatrix::Identity(n, n));
    CHECK(max_abs_diff(W, RealMatrix(2.0 * ph.W_block())) <= 1e-12 * norm1_scale(W));
  }
}

TEST_CASE("check_certificate verdicts on the scalar model") {
  const auto model = scalar_normalized();
  const auto nonstrict = check_certificate(model, RealMatrix::Identity(1, 1));
  CHECK(nonstrict.verdict == CertificateReport::Verdict::Nonstrict);
  CHECK(std::abs(nonstrict.lambda_min_W) < 1e-12);

  const auto invalid = check_certificate(model, RealMatrix::Constant(1, 1, 4.0));
  CHECK(invalid.verdict == CertificateReport::Verdict::Invalid);
  CHECK(invalid.lambda_min_W < 0.0);
}

TEST_CASE("check_certificate is strict for strictly dissipative forms") {
  std::mt19937 rng(19);
  const auto ph = random_strictly_passive_ph(rng, 5, 2);
  const auto report = check_certificate(reconstruct(ph), RealMatrix::Identity(5, 5));
  CHECK(report.verdict == CertificateReport::Verdict::Strict);
}

TEST_CASE("certificate verdicts agree across the congruence transformation") {
  std::mt19937 rng(23);
  int exercised = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const auto ph = random_strictly_passive_ph(rng, 4, 2);
    const auto model = reconstruct(ph);
    // Nearby perturbations of the identity stay certificates for most draws.
    RealMatrix X = random_matrix(rng, 4, 4);
    X = RealMatrix::Identity(4, 4) + 0.05 * RealMatrix(X + X.transpose());
    const auto direct = check_certificate(model, X);
    if (direct.verdict == CertificateReport::Verdict::Invalid) continue;

    const auto transformed = from_certificate(model, X);
    const auto identity_report =
        check_certificate(reconstruct(transformed), RealMatrix::Identity(4, 4));
    // Verdict equality (not value equality) under the congruence.
    const bool direct_strict = direct.verdict == CertificateReport::Verdict::Strict;
    const bool moved_strict = identity_report.verdict == CertificateReport::Verdict::Strict;
    CHECK(direct_strict == moved_strict);
    ++exercised;
  }
  CHECK(exercised > 0);
}

TEST_CASE("positive_real_sweep of the scalar model") {
  const auto sweep = positive_real_sweep(scalar_normalized(), {0.0, 1.0, 10.0});
  REQUIRE(sweep.size() == 3);
  CHECK(std::abs(sweep[0].lambda_min - 4.0) < 1e-13);
  CHECK(std::abs(sweep[1].lambda_min - 3.0) < 1e-13);
  CHECK(std::abs(sweep[2].lambda_min - (2.0 + 2.0 / 101.0)) < 1e-13);
}

TEST_CASE("positive_real_sweep is constant for B = 0, D = I") {
  RealMatrix A = -RealMatrix::Identity(2, 2);
  const auto model = StateSpaceRealization::real_model(A, RealMatrix::Zero(2, 2),
                                                       RealMatrix::Zero(2, 2),
                                                       RealMatrix::Identity(2, 2));
  for (const auto& pt : positive_real_sweep(model, {0.1, 1.0, 100.0}))
    CHECK(std::abs(pt.lambda_min - 2.0) < 1e-14);
}

TEST_CASE("positive_real_sweep of the analytic model at omega = 0") {
  // Z(0)^H + Z(0) = [[3, 0], [0, 3]] from the evaluated transfer.
  const auto sweep = positive_real_sweep(make_analytic(-1.0, 1.0, 2.0), {0.0});
  CHECK(std::abs(sweep[0].lambda_min - 3.0) < 1e-13);
}

TEST_CASE("positive_real_sweep marks pole hits instead of failing") {
  // Lossless model with a pole at omega = 1.
  RealMatrix A(2, 2), B(2, 1), C(1, 2), D(1, 1);
  A << 0, 1, -1, 0;
  B << 1, 0;
  C << 1, 0;
  D << 1;
  const auto model = StateSpaceRealization::real_model(A, B, C, D);
  const auto sweep = positive_real_sweep(model, {0.5, 1.0, 2.0});
  CHECK(sweep[0].valid);
  CHECK(!sweep[1].valid);
  CHECK(sweep[2].valid);
}

TEST_CASE("lambda_min_dissipation values") {
  const auto ph_scalar = extract_ph(scalar_normalized());
  CHECK(std::abs(lambda_min_dissipation(ph_scalar)) < 1e-14);

  PortHamiltonianForm ph;
  ph.J = RealMatrix::Zero(2, 2);
  ph.R = RealMatrix::Identity(2, 2);
  ph.G = RealMatrix::Zero(2, 1);
  ph.P = RealMatrix::Zero(2, 1);
  ph.N = RealMatrix::Zero(1, 1);
  ph.S = RealMatrix::Identity(1, 1);
  ph.Q = RealMatrix::Identity(2, 2);
  CHECK(std::abs(lambda_min_dissipation(ph) - 1.0) < 1e-15);
}
