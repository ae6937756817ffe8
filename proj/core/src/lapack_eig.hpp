#ifndef PHID_LAPACK_EIG_HPP
#define PHID_LAPACK_EIG_HPP

#include "phid/types.hpp"

namespace phid::detail {

/// Generalized eigenvalues of (M, N) in homogeneous (alpha, beta) form with
/// right eigenvectors, via complex QZ. Columns of `vectors` are unit-scaled.
struct GeneralizedEig {
  ComplexVector alpha;
  ComplexVector beta;
  ComplexMatrix vectors;  ///< column k solves (beta_k M - alpha_k N) v = 0
};

/// Throws SingularEvenPencil when the QZ iteration fails to converge.
GeneralizedEig generalized_eig(const ComplexMatrix& M, const ComplexMatrix& N);

}  // namespace phid::detail

#endif  // PHID_LAPACK_EIG_HPP
