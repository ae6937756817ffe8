#include "phid/realify.hpp"

#include <cmath>
#include <string>

#include "phid/errors.hpp"

namespace phid {

namespace {

constexpr double kImagResidueTol = 1e-10;  // absolute, per spec'd realification contract

const Complex kI{0.0, 1.0};

std::vector<RealifierMap::Block> scan_blocks(const std::vector<Complex>& points, const char* side) {
  std::vector<RealifierMap::Block> blocks;
  std::size_t j = 0;
  while (j < points.size()) {
    const Complex z = points[j];
    if (is_real_point(z)) {
      blocks.push_back(RealifierMap::Block::RealPoint);
      ++j;
      continue;
    }
    if (z.imag() < 0.0)
      throw NotSelfConjugate(std::string(side) + " point " + std::to_string(j) +
                             " opens a conjugate pair with negative imaginary part");
    if (j + 1 >= points.size() ||
        std::abs(points[j + 1] - std::conj(z)) > kConjugateTol * std::max(1.0, std::abs(z)))
      throw NotSelfConjugate(std::string(side) + " point " + std::to_string(j) +
                             " is not adjacent to its conjugate partner");
    blocks.push_back(RealifierMap::Block::ConjugatePair);
    j += 2;
  }
  return blocks;
}

ComplexMatrix block_unitary(const std::vector<RealifierMap::Block>& blocks, Index n) {
  ComplexMatrix U = ComplexMatrix::Zero(n, n);
  const double s = 1.0 / std::sqrt(2.0);
  Index k = 0;
  for (RealifierMap::Block b : blocks) {
    if (b == RealifierMap::Block::RealPoint) {
      U(k, k) = 1.0;
      k += 1;
    } else {
      U(k, k) = s;
      U(k, k + 1) = -s * kI;
      U(k + 1, k) = s;
      U(k + 1, k + 1) = s * kI;
      k += 2;
    }
  }
  return U;
}

// Exact real block-diagonal form of a diagonal point matrix: lambda.real() on
// real points, [[a, b], [-b, a]] on conjugate pairs a +- ib.
ComplexMatrix block_points(const std::vector<RealifierMap::Block>& blocks,
                           const ComplexMatrix& diag_points) {
  const Index n = diag_points.rows();
  ComplexMatrix Om = ComplexMatrix::Zero(n, n);
  Index k = 0;
  for (RealifierMap::Block b : blocks) {
    if (b == RealifierMap::Block::RealPoint) {
      Om(k, k) = diag_points(k, k).real();
      k += 1;
    } else {
      const double a = diag_points(k, k).real();
      const double bq = diag_points(k, k).imag();
      Om(k, k) = a;
      Om(k, k + 1) = bq;
      Om(k + 1, k) = -bq;
      Om(k + 1, k + 1) = a;
      k += 2;
    }
  }
  return Om;
}

double imag_residue(const ComplexMatrix& M) {
  return M.size() == 0 ? 0.0 : M.imag().cwiseAbs().maxCoeff();
}

ComplexMatrix drop_imag(const ComplexMatrix& M, const char* name) {
  const double res = imag_residue(M);
  if (res > kImagResidueTol)
    throw NotSelfConjugate(std::string("imaginary residue ") + std::to_string(res) + " in " + name +
                           " after realification; data is not self-conjugate");
  return M.real().cast<Complex>();
}

}  // namespace

RealifierMap build_realifier(const TangentialDataSet& ds) {
  std::vector<Complex> right_points, left_points;
  right_points.reserve(ds.rights.size());
  left_points.reserve(ds.lefts.size());
  for (const RightDatum& d : ds.rights) right_points.push_back(d.lambda);
  for (const LeftDatum& d : ds.lefts) left_points.push_back(d.mu);

  RealifierMap map;
  map.right_blocks = scan_blocks(right_points, "right");
  map.left_blocks = scan_blocks(left_points, "left");
  map.U_right = block_unitary(map.right_blocks, static_cast<Index>(right_points.size()));
  map.U_left = block_unitary(map.left_blocks, static_cast<Index>(left_points.size()));
  return map;
}

LoewnerPencil realify_pencil(const LoewnerPencil& p, const RealifierMap& map) {
  if (map.U_right.rows() != p.n() || map.U_left.rows() != p.n())
    throw InvalidInput("realifier map does not match the pencil dimension");

  LoewnerPencil out;
  out.data = p.data;
  out.symmetric_mode = p.symmetric_mode;
  out.realified = true;

  const ComplexMatrix& UR = map.U_right;
  const ComplexMatrix& UL = map.U_left;

  out.L = drop_imag(UL.adjoint() * p.L * UR, "Loewner matrix");
  out.Ls = drop_imag(UL.adjoint() * p.Ls * UR, "shifted Loewner matrix");
  out.Lrows = drop_imag(UL.adjoint() * p.Lrows, "left directions");
  out.Vrows = drop_imag(UL.adjoint() * p.Vrows, "left values");
  out.Rcols = drop_imag(p.Rcols * UR, "right directions");
  out.Wcols = drop_imag(p.Wcols * UR, "right values");
  out.Lambda = block_points(map.right_blocks, p.Lambda);
  out.Mu = block_points(map.left_blocks, p.Mu);

  if (p.symmetric_mode) {
    // Hermitian/skew-Hermitian by construction; enforce it exactly so that the
    // Cholesky/normalization chain sees clean structure.
    out.L = 0.5 * (out.L + out.L.transpose()).eval();
    out.Ls = 0.5 * (out.Ls - out.Ls.transpose()).eval();
  }
  return out;
}

}  // namespace phid
