#ifndef PHID_ERRORS_HPP
#define PHID_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace phid {

/// Coarse failure class; the CLI maps Data -> exit 2, Numerical -> exit 3.
enum class ErrorKind { Data, Numerical };

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), kind_(kind), code_(std::move(code)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& code() const noexcept { return code_; }

private:
  ErrorKind kind_;
  std::string code_;
};

/// sE - A (or the Loewner pencil) is numerically singular at an evaluation point.
struct SingularPencil : Error {
  explicit SingularPencil(const std::string& w) : Error(ErrorKind::Numerical, "SingularPencil", w) {}
};

/// Spectral-zero right data violates Re(lambda) > 0.
struct InvalidSpectralData : Error {
  explicit InvalidSpectralData(const std::string& w) : Error(ErrorKind::Data, "InvalidSpectralData", w) {}
};

/// Some right point lambda_j equals a left point mu_i; divided differences undefined.
struct PointCollision : Error {
  explicit PointCollision(const std::string& w) : Error(ErrorKind::Data, "PointCollision", w) {}
};

/// Tangential data failed validation (see tangential::validate for details).
struct InvalidTangentialData : Error {
  explicit InvalidTangentialData(const std::string& w) : Error(ErrorKind::Data, "InvalidTangentialData", w) {}
};

/// The Loewner matrix is numerically singular; Theorem-2 assembly impossible.
struct SingularLoewner : Error {
  explicit SingularLoewner(const std::string& w) : Error(ErrorKind::Numerical, "SingularLoewner", w) {}
};

/// Data is not self-conjugate (or not in canonical pair order) where realification needs it.
struct NotSelfConjugate : Error {
  explicit NotSelfConjugate(const std::string& w) : Error(ErrorKind::Data, "NotSelfConjugate", w) {}
};

/// The even pencil of the spectral-zero computation is numerically singular.
struct SingularEvenPencil : Error {
  explicit SingularEvenPencil(const std::string& w) : Error(ErrorKind::Numerical, "SingularEvenPencil", w) {}
};

/// Some computed zero/direction pair fails the residual certificate.
struct ResidualCheckFailed : Error {
  explicit ResidualCheckFailed(const std::string& w) : Error(ErrorKind::Numerical, "ResidualCheckFailed", w) {}
};

/// Right-half-plane zero count differs from the expected state dimension,
/// or a zero sits on (numerically: near) the imaginary axis.
struct UnexpectedZeroCount : Error {
  UnexpectedZeroCount(std::size_t found_, std::size_t expected_, const std::string& w)
      : Error(ErrorKind::Numerical, "UnexpectedZeroCount", w), found(found_), expected(expected_) {}
  std::size_t found;
  std::size_t expected;
};

/// The Pick (realified Loewner) matrix is not positive definite.
struct PickNotPositiveDefinite : Error {
  PickNotPositiveDefinite(std::size_t minor_, const std::string& w)
      : Error(ErrorKind::Numerical, "PickNotPositiveDefinite", w), failed_minor(minor_) {}
  std::size_t failed_minor;  ///< 1-based index of the failing leading minor
};

/// Extraction found a dissipation block with a clearly negative eigenvalue.
struct NotPassiveRealization : Error {
  explicit NotPassiveRealization(const std::string& w) : Error(ErrorKind::Numerical, "NotPassiveRealization", w) {}
};

/// D + D^T is not strictly positive definite.
struct DNotStrictlyPositiveReal : Error {
  explicit DNotStrictlyPositiveReal(const std::string& w) : Error(ErrorKind::Data, "DNotStrictlyPositiveReal", w) {}
};

/// The supplied X is no passivity certificate for the model.
struct CertificateInvalid : Error {
  explicit CertificateInvalid(const std::string& w) : Error(ErrorKind::Data, "CertificateInvalid", w) {}
};

struct XNotPositiveDefinite : Error {
  explicit XNotPositiveDefinite(const std::string& w) : Error(ErrorKind::Data, "XNotPositiveDefinite", w) {}
};

/// Operation requires E = I but was handed a proper descriptor model.
struct DescriptorUnsupported : Error {
  explicit DescriptorUnsupported(const std::string& w) : Error(ErrorKind::Data, "DescriptorUnsupported", w) {}
};

struct TooFewSamples : Error {
  explicit TooFewSamples(const std::string& w) : Error(ErrorKind::Data, "TooFewSamples", w) {}
};

struct EmptyBand : Error {
  explicit EmptyBand(const std::string& w) : Error(ErrorKind::Data, "EmptyBand", w) {}
};

/// Malformed input file or inconsistent matrix dimensions.
struct InvalidInput : Error {
  explicit InvalidInput(const std::string& w) : Error(ErrorKind::Data, "InvalidInput", w) {}
};

}  // namespace phid

#endif  // PHID_ERRORS_HPP
