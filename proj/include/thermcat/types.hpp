#pragma once

// Scalar/vector aliases and the error taxonomy shared by all modules.
//
// Phase-space convention, fixed once for the whole library:
//   alpha = x + i p,   d^2alpha = dx dp,   integral of W over the plane = 1,
//   vacuum W(alpha) = (2/pi) exp(-2|alpha|^2),  thermal x-variance = V/4.
// Units: hbar = nu = 1; temperatures are reported in units of hbar*nu.

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace thermcat {

using Complex = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr Complex kI{0.0, 1.0};

// A complex displacement per mode; for states with a qubit register the
// qubit phase-space coordinate comes first.
using PhasePoint = Eigen::VectorXcd;

struct NonConvergentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ZeroTraceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ImaginaryResidualError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BadParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct BadVarianceError : BadParameterError {
  using BadParameterError::BadParameterError;
};
struct BadTransmittanceError : BadParameterError {
  using BadParameterError::BadParameterError;
};
struct NegativeTimeError : BadParameterError {
  using BadParameterError::BadParameterError;
};
struct ResolutionTooCoarseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NoFringesError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CutoffTooSmallError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct StateCorruptionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace thermcat
