#include "phid/spectral_zeros.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "lapack_eig.hpp"
#include "phid/errors.hpp"

namespace phid {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kInfiniteTol = 1e-12;  // |beta| <= kInfiniteTol * |alpha|  =>  infinite eigenvalue
constexpr double kResidualTol = 1e-8;
constexpr double kAxisTol = 1e-8;  // |Re| <= kAxisTol * (1+|lambda|)  =>  on-axis

/// Unit norm with the largest-modulus entry made real and nonnegative
/// (lowest index wins ties); removes the eigenvector phase freedom.
ComplexVector normalize_direction(const ComplexVector& r) {
  ComplexVector out = r / r.norm();
  Index k = 0;
  double best = std::abs(out(0));
  for (Index i = 1; i < out.size(); ++i) {
    const double a = std::abs(out(i));
    if (a > best) {
      best = a;
      k = i;
    }
  }
  const Complex pivot = out(k);
  if (std::abs(pivot) > 0.0) out *= std::conj(pivot) / std::abs(pivot);
  return out;
}

bool on_axis(Complex z) { return std::abs(z.real()) <= kAxisTol * (1.0 + std::abs(z)); }

}  // namespace

SpectralZeroSet compute_spectral_zeros(const StateSpaceRealization& model) {
  model.check_consistent();
  const Index n = model.n();
  const Index m = model.m();
  const Index dim = 2 * n + m;

  ComplexMatrix M0 = ComplexMatrix::Zero(dim, dim);
  M0.topLeftCorner(n, n) = model.A;
  M0.block(0, 2 * n, n, m) = model.B;
  M0.block(n, n, n, n) = -model.A.transpose();
  M0.block(n, 2 * n, n, m) = -model.C.transpose();
  M0.block(2 * n, 0, m, n) = model.C;
  M0.block(2 * n, n, m, n) = model.B.transpose();
  M0.bottomRightCorner(m, m) = model.D + model.D.transpose();

  ComplexMatrix N0 = ComplexMatrix::Zero(dim, dim);
  N0.topLeftCorner(n, n) = model.E;
  N0.block(n, n, n, n) = model.E.transpose();

  const detail::GeneralizedEig eig = detail::generalized_eig(M0, N0);

  const double pencil_scale = std::max({norm1(M0), norm1(N0), 1.0});
  const double indeterminate_tol = kEps * pencil_scale;

  SpectralZeroSet out;
  std::string offenders;
  for (Index k = 0; k < dim; ++k) {
    const Complex alpha = eig.alpha(k);
    const Complex beta = eig.beta(k);
    if (std::abs(alpha) < indeterminate_tol && std::abs(beta) < indeterminate_tol)
      throw SingularEvenPencil("indeterminate eigenvalue: even pencil is numerically singular");
    if (std::abs(beta) <= kInfiniteTol * std::abs(alpha)) continue;  // infinite eigenvalue

    const Complex lambda = alpha / beta;
    const ComplexVector full = eig.vectors.col(k);
    const ComplexVector tail = full.tail(m);
    if (tail.norm() <= 1e-8 * full.norm()) continue;  // no direction content: pole-type artifact

    const ComplexVector r = normalize_direction(tail);

    ComplexMatrix phi;
    try {
      phi = eval_phi(model, lambda);
    } catch (const SingularPencil&) {
      continue;  // eigenvalue sits on a pole of Z; not a spectral zero
    }
    const double residual = (phi * r).norm();
    if (residual > kResidualTol * norm1_scale(phi)) {
      offenders += " (" + std::to_string(lambda.real()) + (lambda.imag() < 0 ? "-" : "+") +
                   std::to_string(std::abs(lambda.imag())) + "i, residual " + std::to_string(residual) + ")";
      continue;
    }
    out.zeros.push_back(lambda);
    out.directions.push_back(r);
  }
  if (!offenders.empty())
    throw ResidualCheckFailed("zero/direction pairs failed the Phi residual certificate:" + offenders);

  // Deterministic order, and exact conjugate symmetry for real models: the
  // -Im member of each pair is replaced by the conjugate of its +Im partner.
  std::vector<std::size_t> idx(out.zeros.size());
  std::iota(idx.begin(), idx.end(), 0u);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (out.zeros[a].real() != out.zeros[b].real()) return out.zeros[a].real() < out.zeros[b].real();
    return out.zeros[a].imag() < out.zeros[b].imag();
  });
  SpectralZeroSet sorted;
  sorted.source = out.source;
  for (std::size_t i : idx) {
    sorted.zeros.push_back(out.zeros[i]);
    sorted.directions.push_back(out.directions[i]);
  }
  if (model.is_real()) {
    std::vector<bool> used(sorted.zeros.size(), false);
    for (std::size_t i = 0; i < sorted.zeros.size(); ++i) {
      if (used[i] || sorted.zeros[i].imag() <= 0.0) continue;
      for (std::size_t j = 0; j < sorted.zeros.size(); ++j) {
        if (used[j] || i == j) continue;
        if (std::abs(sorted.zeros[j] - std::conj(sorted.zeros[i])) <=
            kAxisTol * (1.0 + std::abs(sorted.zeros[i]))) {
          sorted.zeros[j] = std::conj(sorted.zeros[i]);
          sorted.directions[j] = sorted.directions[i].conjugate();
          used[i] = used[j] = true;
          break;
        }
      }
    }
  }
  return sorted;
}

SpectralZeroSet filter_rhp(const SpectralZeroSet& zs, Index n_expected) {
  std::size_t found = 0;
  for (std::size_t i = 0; i < zs.size(); ++i) {
    if (on_axis(zs.zeros[i])) {
      throw UnexpectedZeroCount(
          0, static_cast<std::size_t>(n_expected),
          "spectral zero on the imaginary axis (system not strictly passive)");
    }
    if (zs.zeros[i].real() > 0.0) ++found;
  }
  if (found != static_cast<std::size_t>(n_expected))
    throw UnexpectedZeroCount(found, static_cast<std::size_t>(n_expected),
                              "found " + std::to_string(found) + " right-half-plane zeros, expected " +
                                  std::to_string(n_expected));

  struct Entry {
    Complex z;
    ComplexVector r;
  };
  std::vector<Entry> reals;
  std::vector<std::pair<Entry, Entry>> pairs;
  std::vector<bool> used(zs.size(), false);
  for (std::size_t i = 0; i < zs.size(); ++i) {
    if (used[i] || !(zs.zeros[i].real() > 0.0)) continue;
    used[i] = true;
    if (is_real_point(zs.zeros[i])) {
      // drop the negligible imaginary part so downstream closure sees a real point
      reals.push_back({Complex(zs.zeros[i].real(), 0.0), zs.directions[i].real().cast<Complex>()});
      continue;
    }
    Entry plus{zs.zeros[i], zs.directions[i]};
    bool paired = false;
    for (std::size_t j = i + 1; j < zs.size(); ++j) {
      if (used[j]) continue;
      if (std::abs(zs.zeros[j] - std::conj(plus.z)) <= kAxisTol * (1.0 + std::abs(plus.z))) {
        used[j] = true;
        paired = true;
        break;
      }
    }
    if (plus.z.imag() < 0.0) {
      plus.z = std::conj(plus.z);
      plus.r = plus.r.conjugate();
    }
    Entry minus{std::conj(plus.z), plus.r.conjugate()};
    (void)paired;  // partner content is regenerated exactly from the +Im member
    pairs.emplace_back(plus, minus);
  }

  std::stable_sort(reals.begin(), reals.end(),
                   [](const Entry& a, const Entry& b) { return a.z.real() < b.z.real(); });
  std::stable_sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
    const double ia = std::abs(a.first.z.imag());
    const double ib = std::abs(b.first.z.imag());
    if (ia != ib) return ia < ib;
    return a.first.z.real() < b.first.z.real();
  });

  SpectralZeroSet out;
  out.source = zs.source;
  for (const Entry& e : reals) {
    out.zeros.push_back(e.z);
    out.directions.push_back(e.r);
  }
  for (const auto& p : pairs) {
    out.zeros.push_back(p.first.z);
    out.directions.push_back(p.first.r);
    out.zeros.push_back(p.second.z);
    out.directions.push_back(p.second.r);
  }
  return out;
}

std::vector<RightDatum> spectral_data_from_model(const StateSpaceRealization& model, Index n) {
  const SpectralZeroSet rhp = filter_rhp(compute_spectral_zeros(model), n);

  std::vector<RightDatum> representatives;
  for (std::size_t i = 0; i < rhp.size(); ++i) {
    if (rhp.zeros[i].imag() < 0.0) continue;  // regenerated by conjugate closure
    RightDatum d;
    d.lambda = rhp.zeros[i];
    d.r = rhp.directions[i];
    d.w = eval_transfer(model, d.lambda) * d.r;
    representatives.push_back(std::move(d));
  }
  return conjugate_closure(representatives);
}

}  // namespace phid
