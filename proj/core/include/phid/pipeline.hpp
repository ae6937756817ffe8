#ifndef PHID_PIPELINE_HPP
#define PHID_PIPELINE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "phid/ph_form.hpp"
#include "phid/spectral_zeros.hpp"
#include "phid/state_space.hpp"
#include "phid/tangential.hpp"
#include "phid/types.hpp"

namespace phid {

/// Measured m x m responses Z(i omega) at strictly increasing positive
/// frequencies.
struct FrequencySampleSet {
  struct Sample {
    double omega = 0.0;
    ComplexMatrix Z;
  };
  std::vector<Sample> samples;
  Index m = 0;
  std::optional<std::pair<double, double>> band;  ///< restriction metadata

  std::size_t size() const { return samples.size(); }

  /// Sorts by omega, validates distinctness/finiteness and the port dimension.
  static FrequencySampleSet from_samples(std::vector<Sample> samples);

  /// Samples a model on a frequency grid.
  static FrequencySampleSet measure(const StateSpaceRealization& model,
                                    const std::vector<double>& omegas);
};

/// Log- or linearly-spaced grid of `count` points on [lo, hi].
std::vector<double> make_grid(double lo, double hi, Index count, bool log_scale);

struct PipelineConfig {
  double svd_rel_tol = 1e-8;
  enum class DMode { Given, EstimateFromTop } d_mode = DMode::EstimateFromTop;
  RealMatrix D_given;  ///< used when d_mode == Given
  std::optional<std::pair<double, double>> band;
  Index grid_count = 200;   ///< CLI sampling default
  bool grid_log = true;     ///< CLI sampling default
};

struct PipelineDiagnostics {
  RealVector singular_values;
  Index reduced_order = 0;
  SpectralZeroSet zeros;
  double pick_condition = 0.0;
  double max_interp_residual = 0.0;
  bool d_estimate_warning = false;  ///< top sample not yet in the flat region
  RealMatrix D_used;
  std::optional<double> in_band_error;   ///< vs. reference, when supplied
  std::optional<double> out_band_error;  ///< vs. reference, when supplied
};

/// Alternating split of the samples into right data (1st, 3rd, ... sample)
/// and left data (2nd, 4th, ...), directions cycling the standard basis,
/// both sides conjugate-closed with the mirrored -i omega data. With an odd
/// sample count the last sample joins the left side so the pencil stays
/// square. Throws TooFewSamples below two samples.
TangentialDataSet split_samples(const FrequencySampleSet& fs);

/// D verbatim in Given mode; entrywise real part of the highest-frequency
/// sample otherwise. flat_warning (optional) reports when the top sample is
/// not yet feedthrough-dominated. Throws DNotStrictlyPositiveReal when the
/// result violates D + D^T > 0.
RealMatrix estimate_D(const FrequencySampleSet& fs, const PipelineConfig& cfg,
                      bool* flat_warning = nullptr);

/// Loewner identification: split, build, realify, SVD-truncate at
/// cfg.svd_rel_tol. Returns the real reduced model (descriptor E) and the
/// singular values of the realified Loewner matrix.
std::pair<StateSpaceRealization, RealVector> identify_loewner(const FrequencySampleSet& fs,
                                                              const PipelineConfig& cfg);

/// Two-stage identification: Loewner model, its right-half-plane spectral
/// zeros and directions, then the normalized port-Hamiltonian construction
/// with the same D.
std::pair<PortHamiltonianForm, PipelineDiagnostics> identify_ph(const FrequencySampleSet& fs,
                                                                const PipelineConfig& cfg);

/// identify_ph on the samples restricted to cfg.band (or `band`); when a
/// reference model is supplied the diagnostics carry in-band/out-of-band
/// maximum relative errors. Throws EmptyBand when no sample falls inside.
std::pair<PortHamiltonianForm, PipelineDiagnostics> identify_ph_limited(
    const FrequencySampleSet& fs, const PipelineConfig& cfg,
    const StateSpaceRealization* reference = nullptr);

}  // namespace phid

#endif  // PHID_PIPELINE_HPP
