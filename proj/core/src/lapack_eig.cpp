#include "lapack_eig.hpp"

#include <string>

#include <lapacke.h>

#include "phid/errors.hpp"

namespace phid::detail {

GeneralizedEig generalized_eig(const ComplexMatrix& M, const ComplexMatrix& N) {
  const lapack_int n = static_cast<lapack_int>(M.rows());
  GeneralizedEig out;
  out.alpha.resize(n);
  out.beta.resize(n);
  out.vectors.resize(n, n);
  if (n == 0) return out;

  ComplexMatrix a = M;  // zggev overwrites its inputs
  ComplexMatrix b = N;
  const lapack_int info = LAPACKE_zggev(
      LAPACK_COL_MAJOR, 'N', 'V', n,
      reinterpret_cast<lapack_complex_double*>(a.data()), n,
      reinterpret_cast<lapack_complex_double*>(b.data()), n,
      reinterpret_cast<lapack_complex_double*>(out.alpha.data()),
      reinterpret_cast<lapack_complex_double*>(out.beta.data()), nullptr, n,
      reinterpret_cast<lapack_complex_double*>(out.vectors.data()), n);
  if (info != 0)
    throw SingularEvenPencil("QZ iteration failed (zggev info = " + std::to_string(info) + ")");
  return out;
}

}  // namespace phid::detail
