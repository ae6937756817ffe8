#include <doctest.h>

#include <cmath>

#include "phid/errors.hpp"
#include "phid/model_zoo.hpp"
#include "phid/passivity.hpp"
#include "phid/pipeline.hpp"
#include "test_helpers.hpp"

using namespace phid;
using namespace phid::testing;

namespace {

FrequencySampleSet rlc5_samples(Index count = 20) {
  return FrequencySampleSet::measure(make_rlc5(), make_grid(1e-1, 1e3, count, true));
}

PipelineConfig given_d(double d, double tol) {
  PipelineConfig cfg;
  cfg.svd_rel_tol = tol;
  cfg.d_mode = PipelineConfig::DMode::Given;
  cfg.D_given = RealMatrix::Constant(1, 1, d);
  return cfg;
}

}  // namespace

TEST_CASE("split_samples doubles both sides by conjugate closure") {
  const auto ds = split_samples(rlc5_samples());
  CHECK(ds.n() == 20);
  CHECK(ds.rights.size() == 20);
  CHECK(ds.lefts.size() == 20);
  CHECK(validate(ds).empty());
  CHECK(!ds.lefts_synthesized);
}

TEST_CASE("split_samples on two samples") {
  const auto ds = split_samples(rlc5_samples(2));
  CHECK(ds.rights.size() == 2);
  CHECK(ds.lefts.size() == 2);
}

TEST_CASE("split_samples needs at least two samples") {
  CHECK_THROWS_AS(split_samples(rlc5_samples(1)), TooFewSamples);
}

TEST_CASE("split_samples drops the last sample of an odd set") {
  const auto ds = split_samples(rlc5_samples(21));
  CHECK(ds.rights.size() == 20);
  CHECK(ds.lefts.size() == 20);
}

TEST_CASE("estimate_D from the top sample of the RLC circuit") {
  PipelineConfig cfg;
  bool warn = true;
  const RealMatrix D = estimate_D(rlc5_samples(), cfg, &warn);
  CHECK(std::abs(D(0, 0) - 2.0) / 2.0 < 0.02);
  CHECK(!warn);
}

TEST_CASE("estimate_D passes a given D through verbatim") {
  const auto cfg = given_d(2.0, 1e-8);
  const RealMatrix D = estimate_D(rlc5_samples(), cfg);
  CHECK(D(0, 0) == 2.0);
}

TEST_CASE("estimate_D rejects samples of a D = 0 system") {
  // Z(s) = 1/(s+1)^2: the real part at high frequency is negative.
  RealMatrix A(2, 2), B(2, 1), C(1, 2), D0(1, 1);
  A << -1, 1, 0, -1;
  B << 0, 1;
  C << 1, 0;
  D0 << 0;
  const auto model = StateSpaceRealization::real_model(A, B, C, D0);
  const auto fs = FrequencySampleSet::measure(model, make_grid(1e-1, 1e3, 10, true));
  PipelineConfig cfg;
  CHECK_THROWS_AS(estimate_D(fs, cfg), DNotStrictlyPositiveReal);
}

TEST_CASE("estimate_D warns when the top sample is not feedthrough-dominated") {
  const auto fs = FrequencySampleSet::measure(make_rlc5(), make_grid(1e-1, 5.0, 8, true));
  PipelineConfig cfg;
  bool warn = false;
  estimate_D(fs, cfg, &warn);
  CHECK(warn);
}

TEST_CASE("identify_loewner recovers the RLC circuit with the exact feedthrough") {
  const auto fs = rlc5_samples();
  const auto [model, sv] = identify_loewner(fs, given_d(2.0, 1e-10));
  CHECK(model.n() == 5);
  CHECK(model.is_real());
  CHECK(sv.size() == 20);
  CHECK(sv(5) / sv(0) <= 1e-12);

  double worst = 0.0;
  const auto reference = make_rlc5();
  for (const auto& s : fs.samples) {
    const ComplexMatrix Z = eval_transfer(model, Complex(0.0, s.omega));
    worst = std::max(worst, (Z - s.Z).norm() / s.Z.norm());
  }
  (void)reference;
  CHECK(worst <= 1e-6);
}

TEST_CASE("identify_loewner with the estimated feedthrough stays at the estimate's accuracy") {
  PipelineConfig cfg;
  cfg.svd_rel_tol = 1e-10;
  const auto fs = rlc5_samples();
  const auto [model, sv] = identify_loewner(fs, cfg);
  CHECK(model.n() == 5);
  double worst = 0.0;
  for (const auto& s : fs.samples) {
    const ComplexMatrix Z = eval_transfer(model, Complex(0.0, s.omega));
    worst = std::max(worst, (Z - s.Z).norm() / s.Z.norm());
  }
  CHECK(worst <= 2e-3);
}

TEST_CASE("identify_loewner with rel_tol = 0 interpolates every sample") {
  const auto fs = rlc5_samples();
  const auto [model, sv] = identify_loewner(fs, given_d(2.0, 0.0));
  CHECK(model.n() == 20);
  for (const auto& s : fs.samples) {
    const ComplexMatrix Z = eval_transfer(model, Complex(0.0, s.omega));
    CHECK((Z - s.Z).norm() <= 1e-8 * s.Z.norm());
  }
}

TEST_CASE("identify_ph on the RLC circuit") {
  const auto fs = rlc5_samples();
  const auto [ph, diag] = identify_ph(fs, given_d(2.0, 1e-8));
  CHECK(ph.n() == 5);
  CHECK(ph.is_normalized());
  CHECK(diag.reduced_order == 5);
  CHECK(diag.max_interp_residual <= 1e-8);
  CHECK(diag.pick_condition > 1.0);

  const auto model = reconstruct(ph);
  double worst = 0.0;
  for (const auto& s : fs.samples) {
    const ComplexMatrix Z = eval_transfer(model, Complex(0.0, s.omega));
    worst = std::max(worst, (Z - s.Z).norm() / s.Z.norm());
  }
  CHECK(worst <= 1e-6);
}

TEST_CASE("identify_ph fails loudly on samples of a non-passive system") {
  auto bad = make_rlc5();
  bad.D = -bad.D;  // negated feedthrough: not positive real
  const auto fs = FrequencySampleSet::measure(bad, make_grid(1e-1, 1e3, 20, true));
  PipelineConfig cfg;
  CHECK_THROWS_AS(identify_ph(fs, cfg), Error);
}

TEST_CASE("identify_ph_limited over the full range matches identify_ph") {
  const auto fs = rlc5_samples();
  auto cfg = given_d(2.0, 1e-8);
  const auto [ph_full, diag_full] = identify_ph(fs, cfg);
  cfg.band = std::make_pair(1e-2, 1e4);
  const auto reference = make_rlc5();
  const auto [ph_band, diag_band] = identify_ph_limited(fs, cfg, &reference);
  CHECK(max_rel_transfer_error(reconstruct(ph_band), reconstruct(ph_full),
                               imaginary_test_points(1e-1, 1e3, 20)) < 1e-12);
  REQUIRE(diag_band.in_band_error.has_value());
  CHECK(*diag_band.in_band_error <= 1e-6);
}

TEST_CASE("identify_ph_limited rejects an empty band") {
  auto cfg = given_d(2.0, 1e-8);
  cfg.band = std::make_pair(1e6, 1e7);
  CHECK_THROWS_AS(identify_ph_limited(rlc5_samples(), cfg), EmptyBand);
}

TEST_CASE("the pipeline is bitwise deterministic") {
  const auto fs = rlc5_samples();
  const auto cfg = given_d(2.0, 1e-8);
  const auto [ph1, d1] = identify_ph(fs, cfg);
  const auto [ph2, d2] = identify_ph(fs, cfg);
  CHECK(max_abs_diff(ph1.J, ph2.J) == 0.0);
  CHECK(max_abs_diff(ph1.R, ph2.R) == 0.0);
  CHECK(max_abs_diff(ph1.G, ph2.G) == 0.0);
  CHECK(max_abs_diff(ph1.P, ph2.P) == 0.0);
  CHECK((d1.singular_values - d2.singular_values).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("make_grid spacing") {
  const auto lin = make_grid(1.0, 5.0, 5, false);
  CHECK(lin.size() == 5);
  CHECK(lin[1] == 2.0);
  const auto lg = make_grid(1.0, 100.0, 3, true);
  CHECK(std::abs(lg[1] - 10.0) < 1e-12);
  CHECK_THROWS_AS(make_grid(-1.0, 10.0, 5, true), InvalidInput);
}
