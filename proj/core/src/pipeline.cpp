#include "phid/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Eigenvalues>

#include "phid/errors.hpp"
#include "phid/loewner.hpp"
#include "phid/realify.hpp"

namespace phid {

namespace {

double rel_error_at(const StateSpaceRealization& model, const StateSpaceRealization& reference,
                    double omega) {
  const ComplexMatrix Zm = eval_transfer(model, Complex(0.0, omega));
  const ComplexMatrix Zr = eval_transfer(reference, Complex(0.0, omega));
  return (Zm - Zr).norm() / Zr.norm();
}

}  // namespace

FrequencySampleSet FrequencySampleSet::from_samples(std::vector<Sample> samples) {
  FrequencySampleSet fs;
  fs.samples = std::move(samples);
  std::stable_sort(fs.samples.begin(), fs.samples.end(),
                   [](const Sample& a, const Sample& b) { return a.omega < b.omega; });
  if (!fs.samples.empty()) {
    fs.m = fs.samples.front().Z.rows();
    if (fs.m < 1) throw InvalidInput("samples must carry at least a 1x1 response");
  }
  for (std::size_t k = 0; k < fs.samples.size(); ++k) {
    const Sample& s = fs.samples[k];
    if (!(s.omega > 0.0)) throw InvalidInput("sample frequencies must be positive");
    if (s.Z.rows() != fs.m || s.Z.cols() != fs.m)
      throw InvalidInput("all samples must be m x m with a common m");
    if (!s.Z.allFinite()) throw InvalidInput("sample responses must be finite");
    if (k > 0 && !(fs.samples[k - 1].omega < s.omega))
      throw InvalidInput("sample frequencies must be distinct");
  }
  return fs;
}

FrequencySampleSet FrequencySampleSet::measure(const StateSpaceRealization& model,
                                               const std::vector<double>& omegas) {
  std::vector<Sample> samples;
  samples.reserve(omegas.size());
  for (double w : omegas) samples.push_back({w, eval_transfer(model, Complex(0.0, w))});
  return from_samples(std::move(samples));
}

std::vector<double> make_grid(double lo, double hi, Index count, bool log_scale) {
  if (count < 1 || !(lo > 0.0) || !(lo < hi)) throw InvalidInput("grid needs 0 < lo < hi and count >= 1");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count));
  if (count == 1) {
    out.push_back(lo);
    return out;
  }
  for (Index i = 0; i < count; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(count - 1);
    out.push_back(log_scale ? lo * std::pow(hi / lo, t) : lo + t * (hi - lo));
  }
  return out;
}

TangentialDataSet split_samples(const FrequencySampleSet& fs) {
  if (fs.size() < 2) throw TooFewSamples("need at least two samples to split into left and right data");
  const Index m = fs.m;
  // Conjugate closure doubles both sides, so the split must hand each side
  // the same count; with an odd sample count the last (highest-frequency)
  // sample is left out of the pencil. It still feeds the D estimate.
  const std::size_t K = fs.size() - (fs.size() % 2);

  std::vector<RightDatum> rights;
  std::vector<LeftDatum> lefts;
  Index right_counter = 0;
  Index left_counter = 0;
  for (std::size_t k = 0; k < K; ++k) {
    const bool is_right = (k % 2 == 0);
    const auto& sample = fs.samples[k];
    const Complex point(0.0, sample.omega);
    if (is_right) {
      ComplexVector r = ComplexVector::Zero(m);
      r(right_counter % m) = 1.0;
      ++right_counter;
      const ComplexVector w = sample.Z * r;
      rights.push_back({point, r, w});
      rights.push_back({std::conj(point), r, w.conjugate()});
    } else {
      ComplexRowVector ell = ComplexRowVector::Zero(m);
      ell(left_counter % m) = 1.0;
      ++left_counter;
      const ComplexRowVector v = ell * sample.Z;
      lefts.push_back({point, ell, v});
      lefts.push_back({std::conj(point), ell, v.conjugate()});
    }
  }

  TangentialDataSet ds;
  ds.rights = conjugate_closure(rights);
  ds.lefts = conjugate_closure(lefts);
  ds.m = m;
  ds.D = RealMatrix::Zero(m, m);
  ds.lefts_synthesized = false;
  return ds;
}

RealMatrix estimate_D(const FrequencySampleSet& fs, const PipelineConfig& cfg, bool* flat_warning) {
  if (flat_warning != nullptr) *flat_warning = false;
  RealMatrix D;
  if (cfg.d_mode == PipelineConfig::DMode::Given) {
    D = cfg.D_given;
    if (D.rows() != D.cols() || (fs.m > 0 && D.rows() != fs.m))
      throw InvalidInput("given D must be m x m");
  } else {
    if (fs.samples.empty()) throw InvalidInput("cannot estimate D from an empty sample set");
    const ComplexMatrix& top = fs.samples.back().Z;
    D = top.real();
    if (norm1(top.imag()) > 0.1 * norm1(top.real()) && flat_warning != nullptr) *flat_warning = true;
  }
  const RealMatrix Dsym = D + D.transpose();
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(Dsym, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() <= 1e-12 * norm1_scale(Dsym))
    throw DNotStrictlyPositiveReal("estimated/given D violates D + D^T > 0");
  return D;
}

namespace {

struct LoewnerStage {
  StateSpaceRealization model;
  RealVector singular_values;
  RealMatrix D;
  bool d_warning = false;
};

LoewnerStage run_loewner(const FrequencySampleSet& fs, const PipelineConfig& cfg) {
  LoewnerStage stage;
  stage.D = estimate_D(fs, cfg, &stage.d_warning);
  const TangentialDataSet ds = split_samples(fs);
  const LoewnerPencil pencil = build_pencil(ds);
  const RealifierMap map = build_realifier(ds);
  const LoewnerPencil real_pencil = realify_pencil(pencil, map);
  TruncationResult trunc = svd_truncate(real_pencil, stage.D, cfg.svd_rel_tol);
  stage.model = std::move(trunc.model);
  stage.singular_values = std::move(trunc.singular_values);
  return stage;
}

}  // namespace

std::pair<StateSpaceRealization, RealVector> identify_loewner(const FrequencySampleSet& fs,
                                                              const PipelineConfig& cfg) {
  LoewnerStage stage = run_loewner(fs, cfg);
  return {std::move(stage.model), std::move(stage.singular_values)};
}

std::pair<PortHamiltonianForm, PipelineDiagnostics> identify_ph(const FrequencySampleSet& fs,
                                                                const PipelineConfig& cfg) {
  LoewnerStage stage = run_loewner(fs, cfg);
  const Index r = stage.model.n();

  PipelineDiagnostics diag;
  diag.singular_values = stage.singular_values;
  diag.reduced_order = r;
  diag.d_estimate_warning = stage.d_warning;
  diag.D_used = stage.D;

  diag.zeros = filter_rhp(compute_spectral_zeros(stage.model), r);
  diag.zeros.source = "loewner model (order " + std::to_string(r) + ")";

  const std::vector<RightDatum> rights = spectral_data_from_model(stage.model, r);
  PortHamiltonianForm ph = ph_from_spectral_data(rights, stage.D);

  // Pick conditioning of the spectral-zero pencil behind the construction.
  if (!rights.empty()) {
    const TangentialDataSet sz_data = left_from_spectral(rights);
    const LoewnerPencil sz_pencil = build_pencil(sz_data);
    const LoewnerPencil sz_real = realify_pencil(sz_pencil, build_realifier(sz_data));
    Eigen::SelfAdjointEigenSolver<RealMatrix> es(RealMatrix(sz_real.L.real()), Eigen::EigenvaluesOnly);
    const double lmin = es.eigenvalues().minCoeff();
    const double lmax = es.eigenvalues().maxCoeff();
    diag.pick_condition = lmin > 0.0 ? lmax / lmin : std::numeric_limits<double>::infinity();
  }

  const StateSpaceRealization ph_model = reconstruct(ph);
  for (const RightDatum& d : rights) {
    const ComplexVector mism = eval_transfer(ph_model, d.lambda) * d.r - d.w;
    diag.max_interp_residual = std::max(diag.max_interp_residual, mism.norm() / d.w.norm());
  }

  return {std::move(ph), std::move(diag)};
}

std::pair<PortHamiltonianForm, PipelineDiagnostics> identify_ph_limited(
    const FrequencySampleSet& fs, const PipelineConfig& cfg, const StateSpaceRealization* reference) {
  if (!cfg.band) throw InvalidInput("identify_ph_limited requires a band in the configuration");
  const auto [lo, hi] = *cfg.band;
  if (!(lo < hi)) throw InvalidInput("band must satisfy lo < hi");

  std::vector<FrequencySampleSet::Sample> in_band;
  for (const auto& s : fs.samples)
    if (s.omega >= lo && s.omega <= hi) in_band.push_back(s);
  if (in_band.empty())
    throw EmptyBand("no sample lies in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");

  FrequencySampleSet restricted = FrequencySampleSet::from_samples(std::move(in_band));
  restricted.band = cfg.band;

  PipelineConfig sub_cfg = cfg;
  sub_cfg.band.reset();
  auto [ph, diag] = identify_ph(restricted, sub_cfg);

  if (reference != nullptr) {
    const StateSpaceRealization model = reconstruct(ph);
    double in_err = 0.0, out_err = 0.0;
    bool has_out = false;
    for (const auto& s : fs.samples) {
      const double err = rel_error_at(model, *reference, s.omega);
      if (s.omega >= lo && s.omega <= hi) {
        in_err = std::max(in_err, err);
      } else {
        out_err = std::max(out_err, err);
        has_out = true;
      }
    }
    diag.in_band_error = in_err;
    if (has_out) diag.out_band_error = out_err;
  }
  return {std::move(ph), std::move(diag)};
}

}  // namespace phid
