#include "phid/model_zoo.hpp"

#include <cmath>

#include "phid/errors.hpp"
#include "phid/ph_form.hpp"

namespace phid {

namespace {

constexpr double kLadderFreqLo = 0.25;
constexpr double kLadderFreqHi = 300.0;
constexpr double kLadderCoupling = 0.7;  // inter-section coupling ratio

// Radical-inverse (bit-reversal) sequence in (0, 1); any prefix of the
// resulting frequency list already covers the full range roughly uniformly
// in log scale, so the port-visible leading sections span all decades.
double van_der_corput(Index j) {
  double x = 0.0;
  double f = 0.5;
  while (j > 0) {
    x += f * static_cast<double>(j & 1);
    j >>= 1;
    f *= 0.5;
  }
  return x;
}

double section_frequency(Index j, Index k) {
  (void)k;
  return kLadderFreqLo * std::pow(kLadderFreqHi / kLadderFreqLo, van_der_corput(j));
}

}  // namespace

LadderSpec LadderSpec::with_defaults(Index k) {
  LadderSpec spec;
  spec.sections = k;
  spec.dissipation.resize(static_cast<std::size_t>(k));
  for (Index i = 1; i <= k; ++i)
    spec.dissipation[static_cast<std::size_t>(i - 1)] =
        0.05 + 0.15 * static_cast<double>(i) / static_cast<double>(k);
  spec.feedthrough = 1.0;
  return spec;
}

void LadderSpec::check() const {
  if (sections < 1) throw InvalidInput("ladder needs at least one section");
  if (static_cast<Index>(dissipation.size()) != sections)
    throw InvalidInput("dissipation profile length must equal the section count");
  for (double r : dissipation)
    if (!(r > 0.0)) throw InvalidInput("dissipation values must be positive");
  if (!(feedthrough > 0.0)) throw InvalidInput("feedthrough must be positive");
}

StateSpaceRealization make_analytic(double a, double b, double d) {
  if (!(a < 0.0)) throw InvalidInput("make_analytic requires a < 0");
  if (!(d > 0.0)) throw InvalidInput("make_analytic requires d > 0");
  RealMatrix A(2, 2);
  A << a, b, -b, a;
  const RealMatrix B = RealMatrix::Identity(2, 2);
  const RealMatrix C = -RealMatrix::Identity(2, 2);
  const RealMatrix D = d * RealMatrix::Identity(2, 2);
  return StateSpaceRealization::real_model(A, B, C, D);
}

StateSpaceRealization make_rlc5() {
  RealMatrix A(5, 5);
  A << -20, -10, 0, 0, 0,
        10,   0, -10, 0, 0,
         0,  10, 0, -10, 0,
         0,   0, 10, 0, -10,
         0,   0, 0, 10, -2;
  RealMatrix B(5, 1);
  B << 20, 0, 0, 0, 0;
  RealMatrix C(1, 5);
  C << -2, 0, 0, 0, 0;
  RealMatrix D(1, 1);
  D << 2;
  return StateSpaceRealization::real_model(A, B, C, D);
}

StateSpaceRealization make_ladder(const LadderSpec& spec) {
  spec.check();
  const Index k = spec.sections;
  const Index n = 2 * k;

  std::vector<double> freq(static_cast<std::size_t>(k));
  for (Index j = 0; j < k; ++j) freq[static_cast<std::size_t>(j)] = section_frequency(j, k);

  PortHamiltonianForm ph;
  ph.J = RealMatrix::Zero(n, n);
  for (Index j = 0; j < k; ++j) {
    const double wj = freq[static_cast<std::size_t>(j)];
    ph.J(2 * j, 2 * j + 1) = wj;  // internal inductor/capacitor exchange
    ph.J(2 * j + 1, 2 * j) = -wj;
    if (j + 1 < k) {
      const double cj = kLadderCoupling * std::sqrt(wj * freq[static_cast<std::size_t>(j + 1)]);
      ph.J(2 * j + 1, 2 * j + 2) = cj;
      ph.J(2 * j + 2, 2 * j + 1) = -cj;
    }
  }

  ph.R = RealMatrix::Zero(n, n);
  for (Index j = 0; j < k; ++j) {
    const double val = spec.dissipation[static_cast<std::size_t>(j)] * freq[static_cast<std::size_t>(j)];
    ph.R(2 * j, 2 * j) = val;
    ph.R(2 * j + 1, 2 * j + 1) = val;
  }

  ph.G = RealMatrix::Zero(n, 1);
  ph.G(0, 0) = 1.0;
  ph.P = RealMatrix::Zero(n, 1);
  ph.N = RealMatrix::Zero(1, 1);
  ph.S = RealMatrix::Constant(1, 1, spec.feedthrough);
  ph.Q = RealMatrix::Identity(n, n);

  return reconstruct(ph);
}

}  // namespace phid
