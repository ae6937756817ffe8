#ifndef PHID_IO_HPP
#define PHID_IO_HPP

#include <string>
#include <vector>

#include "phid/passivity.hpp"
#include "phid/ph_form.hpp"
#include "phid/pipeline.hpp"
#include "phid/spectral_zeros.hpp"
#include "phid/state_space.hpp"
#include "phid/tangential.hpp"

namespace phid::io {

// Model file: JSON object with keys "E" (optional), "A", "B", "C", "D"; each
// a row-major array of arrays, entries either numbers or [re, im] pairs.
StateSpaceRealization load_model(const std::string& path);
void save_model(const StateSpaceRealization& model, const std::string& path);

// Port-Hamiltonian file: JSON object with keys "J", "R", "G", "P", "N", "S",
// "Q"; the loader re-validates all structural invariants.
PortHamiltonianForm load_ph(const std::string& path);
void save_ph(const PortHamiltonianForm& ph, const std::string& path);

/// True when the JSON file carries port-Hamiltonian keys rather than state-space ones.
bool is_ph_file(const std::string& path);

// Tangential data file: JSON with "m", "D" and "rights"; "lefts" are
// synthesized via left_from_spectral when absent (requires Re(lambda) > 0).
TangentialDataSet load_tangential(const std::string& path);
void save_tangential(const TangentialDataSet& ds, const std::string& path);

// Samples CSV: one row per frequency; columns omega, then Re/Im of the
// response entries row-major. Lines starting with '#' are comments.
FrequencySampleSet load_samples_csv(const std::string& path);
void save_samples_csv(const FrequencySampleSet& fs, const std::string& path);

/// Singular values as (index, value) rows, 1-based, descending.
void save_singular_values_csv(const RealVector& sv, const std::string& path);

/// Zero set as (Re lambda, Im lambda, Re r_1, Im r_1, ...) rows.
void save_zeros_csv(const SpectralZeroSet& zs, const std::string& path);

/// Positive-real sweep as (omega, lambda_min) rows; skipped points carry nan.
void save_sweep_csv(const std::vector<SweepPoint>& sweep, const std::string& path);

/// Bode magnitude data: omega, then |Z_ij(i omega)| row-major.
void save_bode_csv(const StateSpaceRealization& model, const std::vector<double>& omegas,
                   const std::string& path);

/// Real matrix from a JSON file holding either a bare array of arrays or an
/// object with a matrix under `key` (tried in that order).
RealMatrix load_real_matrix(const std::string& path, const std::string& key);

}  // namespace phid::io

#endif  // PHID_IO_HPP
