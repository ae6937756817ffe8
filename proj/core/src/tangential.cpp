#include "phid/tangential.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "phid/errors.hpp"

namespace phid {

namespace {

// Points closer than this are treated as coincident; divided differences
// would be meaningless below it.
constexpr double kCollisionTol = 1e-12;

Complex point_of(const RightDatum& d) { return d.lambda; }
Complex point_of(const LeftDatum& d) { return d.mu; }

RightDatum conjugate_of(const RightDatum& d) {
  return {std::conj(d.lambda), d.r.conjugate(), d.w.conjugate()};
}
LeftDatum conjugate_of(const LeftDatum& d) {
  return {std::conj(d.mu), d.ell.conjugate(), d.v.conjugate()};
}

bool points_conjugate(Complex a, Complex b) {
  return std::abs(a - std::conj(b)) <= kConjugateTol * std::max(1.0, std::abs(a));
}

template <typename V>
bool vec_conj_match(const V& a, const V& b) {
  return (a - b.conjugate()).norm() <= kConjugateTol * std::max(1.0, a.norm());
}

bool data_conjugate(const RightDatum& a, const RightDatum& b) {
  return points_conjugate(a.lambda, b.lambda) && vec_conj_match(a.r, b.r) && vec_conj_match(a.w, b.w);
}
bool data_conjugate(const LeftDatum& a, const LeftDatum& b) {
  return points_conjugate(a.mu, b.mu) && vec_conj_match(a.ell, b.ell) && vec_conj_match(a.v, b.v);
}

template <typename Datum>
std::vector<Datum> close_and_sort(const std::vector<Datum>& in) {
  std::vector<Datum> reals;
  std::vector<std::pair<Datum, Datum>> pairs;  // stored (+Im, -Im)
  std::vector<bool> used(in.size(), false);

  for (std::size_t i = 0; i < in.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    if (is_real_point(point_of(in[i]))) {
      reals.push_back(in[i]);
      continue;
    }
    Datum plus = in[i];
    Datum minus;
    bool found = false;
    for (std::size_t j = i + 1; j < in.size(); ++j) {
      if (!used[j] && data_conjugate(in[i], in[j])) {
        minus = in[j];
        used[j] = true;
        found = true;
        break;
      }
    }
    if (!found) minus = conjugate_of(in[i]);
    if (point_of(plus).imag() < 0) std::swap(plus, minus);
    pairs.emplace_back(std::move(plus), std::move(minus));
  }

  std::stable_sort(reals.begin(), reals.end(), [](const Datum& a, const Datum& b) {
    return point_of(a).real() < point_of(b).real();
  });
  std::stable_sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
    const double ia = std::abs(point_of(a.first).imag());
    const double ib = std::abs(point_of(b.first).imag());
    if (ia != ib) return ia < ib;
    return point_of(a.first).real() < point_of(b.first).real();
  });

  std::vector<Datum> out;
  out.reserve(reals.size() + 2 * pairs.size());
  for (auto& d : reals) out.push_back(std::move(d));
  for (auto& p : pairs) {
    out.push_back(std::move(p.first));
    out.push_back(std::move(p.second));
  }
  return out;
}

template <typename Datum>
void check_conjugate_set(const std::vector<Datum>& data, const char* side, std::vector<Violation>& out) {
  std::vector<bool> used(data.size(), false);
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (used[i] || is_real_point(point_of(data[i]))) continue;
    bool found = false;
    for (std::size_t j = 0; j < data.size(); ++j) {
      if (j != i && !used[j] && data_conjugate(data[i], data[j])) {
        used[i] = used[j] = true;
        found = true;
        break;
      }
    }
    if (!found) {
      out.push_back({Violation::Kind::MissingConjugate,
                     std::string(side) + " datum at index " + std::to_string(i) + " lacks its conjugate partner"});
    }
  }
}

bool coincident(Complex a, Complex b) {
  return std::abs(a - b) <= kCollisionTol * std::max(1.0, std::abs(a));
}

}  // namespace

bool is_real_point(Complex z, double tol) {
  return std::abs(z.imag()) <= tol * std::max(1.0, std::abs(z));
}

ComplexMatrix TangentialDataSet::Lambda() const {
  ComplexMatrix out = ComplexMatrix::Zero(n(), n());
  for (Index j = 0; j < n(); ++j) out(j, j) = rights[j].lambda;
  return out;
}

ComplexMatrix TangentialDataSet::Mu() const {
  const Index k = static_cast<Index>(lefts.size());
  ComplexMatrix out = ComplexMatrix::Zero(k, k);
  for (Index i = 0; i < k; ++i) out(i, i) = lefts[i].mu;
  return out;
}

ComplexMatrix TangentialDataSet::Lmat() const {
  ComplexMatrix out(static_cast<Index>(lefts.size()), m);
  for (std::size_t i = 0; i < lefts.size(); ++i) out.row(static_cast<Index>(i)) = lefts[i].ell;
  return out;
}

ComplexMatrix TangentialDataSet::Vmat() const {
  ComplexMatrix out(static_cast<Index>(lefts.size()), m);
  for (std::size_t i = 0; i < lefts.size(); ++i) out.row(static_cast<Index>(i)) = lefts[i].v;
  return out;
}

ComplexMatrix TangentialDataSet::Rmat() const {
  ComplexMatrix out(m, n());
  for (Index j = 0; j < n(); ++j) out.col(j) = rights[j].r;
  return out;
}

ComplexMatrix TangentialDataSet::Wmat() const {
  ComplexMatrix out(m, n());
  for (Index j = 0; j < n(); ++j) out.col(j) = rights[j].w;
  return out;
}

std::vector<RightDatum> conjugate_closure(const std::vector<RightDatum>& rights) {
  return close_and_sort(rights);
}

std::vector<LeftDatum> conjugate_closure(const std::vector<LeftDatum>& lefts) {
  return close_and_sort(lefts);
}

TangentialDataSet left_from_spectral(const std::vector<RightDatum>& rights_in) {
  TangentialDataSet ds;
  ds.rights = conjugate_closure(rights_in);
  ds.m = ds.rights.empty() ? 0 : ds.rights.front().r.size();
  ds.D = RealMatrix::Zero(ds.m, ds.m);
  ds.lefts_synthesized = true;
  ds.lefts.reserve(ds.rights.size());
  for (const RightDatum& d : ds.rights) {
    if (d.lambda.real() <= 0.0)
      throw InvalidSpectralData("spectral interpolation point with Re(lambda) <= 0");
    LeftDatum l;
    l.mu = -std::conj(d.lambda);
    l.ell = d.r.adjoint();
    l.v = -d.w.adjoint();
    ds.lefts.push_back(std::move(l));
  }
  return ds;
}

std::vector<Violation> validate(const TangentialDataSet& ds) {
  std::vector<Violation> out;

  if (ds.rights.size() != ds.lefts.size())
    out.push_back({Violation::Kind::DimensionMismatch,
                   "right count " + std::to_string(ds.rights.size()) + " != left count " +
                       std::to_string(ds.lefts.size())});
  if (ds.D.rows() != ds.m || ds.D.cols() != ds.m)
    out.push_back({Violation::Kind::DimensionMismatch, "D is not m x m"});

  for (std::size_t j = 0; j < ds.rights.size(); ++j) {
    const RightDatum& d = ds.rights[j];
    if (d.r.size() != ds.m || d.w.size() != ds.m)
      out.push_back({Violation::Kind::DimensionMismatch, "right datum " + std::to_string(j) + " has wrong vector length"});
    else if (d.r.norm() == 0.0)
      out.push_back({Violation::Kind::ZeroDirection, "right datum " + std::to_string(j) + " has r = 0"});
  }
  for (std::size_t i = 0; i < ds.lefts.size(); ++i) {
    const LeftDatum& d = ds.lefts[i];
    if (d.ell.size() != ds.m || d.v.size() != ds.m)
      out.push_back({Violation::Kind::DimensionMismatch, "left datum " + std::to_string(i) + " has wrong vector length"});
    else if (d.ell.norm() == 0.0)
      out.push_back({Violation::Kind::ZeroDirection, "left datum " + std::to_string(i) + " has ell = 0"});
  }

  check_conjugate_set(ds.rights, "right", out);
  check_conjugate_set(ds.lefts, "left", out);

  for (std::size_t j = 0; j < ds.rights.size(); ++j)
    for (std::size_t i = 0; i < ds.lefts.size(); ++i)
      if (coincident(ds.rights[j].lambda, ds.lefts[i].mu))
        out.push_back({Violation::Kind::PointCollision,
                       "lambda_" + std::to_string(j) + " collides with mu_" + std::to_string(i)});

  // Coincident points on one side are only fatal when the directions are
  // parallel too (duplicated pencil row/column); distinct directions at a
  // repeated point are legitimate tangential data.
  auto parallel = [](const ComplexVector& a, const ComplexVector& b) {
    const double na = a.norm(), nb = b.norm();
    if (na == 0.0 || nb == 0.0) return true;
    return std::abs(a.dot(b)) >= (1.0 - 1e-10) * na * nb;
  };
  for (std::size_t j = 0; j < ds.rights.size(); ++j)
    for (std::size_t k = j + 1; k < ds.rights.size(); ++k)
      if (coincident(ds.rights[j].lambda, ds.rights[k].lambda) &&
          ds.rights[j].r.size() == ds.rights[k].r.size() && parallel(ds.rights[j].r, ds.rights[k].r))
        out.push_back({Violation::Kind::DuplicatePoint,
                       "right data " + std::to_string(j) + " and " + std::to_string(k) + " coincide"});
  for (std::size_t i = 0; i < ds.lefts.size(); ++i)
    for (std::size_t k = i + 1; k < ds.lefts.size(); ++k)
      if (coincident(ds.lefts[i].mu, ds.lefts[k].mu) && ds.lefts[i].ell.size() == ds.lefts[k].ell.size() &&
          parallel(ds.lefts[i].ell.transpose(), ds.lefts[k].ell.transpose()))
        out.push_back({Violation::Kind::DuplicatePoint,
                       "left data " + std::to_string(i) + " and " + std::to_string(k) + " coincide"});

  return out;
}

}  // namespace phid
