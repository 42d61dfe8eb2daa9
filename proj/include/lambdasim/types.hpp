#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

#include <Eigen/Dense>

namespace lambdasim {

using Real = double;
using Complex = std::complex<Real>;

// Dense types templated on scalar; Eigen is the only math dependency.
template <typename T>
using Vector3C = Eigen::Matrix<std::complex<T>, 3, 1>;
template <typename T>
using Matrix3C = Eigen::Matrix<std::complex<T>, 3, 3>;
template <typename T>
using Vector2C = Eigen::Matrix<std::complex<T>, 2, 1>;
template <typename T>
using Matrix2C = Eigen::Matrix<std::complex<T>, 2, 2>;

using Vector3c = Vector3C<Real>;
using Matrix3c = Matrix3C<Real>;
using Vector2c = Vector2C<Real>;
using Matrix2c = Matrix2C<Real>;
using VectorX = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

// Bare-basis probability amplitudes, ordered (c1, c2, c3).
using Amplitudes = Vector3c;
// Bright/dark-basis amplitudes, ordered (c_b, c2, c_d).
using BrightDarkAmplitudes = Vector3c;

inline constexpr Complex imag_unit{0.0, 1.0};

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Both peak Rabi frequencies vanish: mixing angle and Rabi-cycle time undefined.
struct DegeneratePulse : Error {
  using Error::Error;
};

// Initial amplitudes not normalized to 1 (and the caller did not opt out).
struct InvalidInitialState : Error {
  using Error::Error;
};

// Adaptive step shrank below the resolvable floor; the problem is too stiff
// for the explicit integrator at the requested tolerances.
struct StepSizeUnderflow : Error {
  using Error::Error;
};

// p1 + p3 below threshold: post-selection over {|1>,|3>} undefined.
struct VanishingSupport : Error {
  using Error::Error;
};

// Target superposition has no overlap with the initial state |1>.
struct TargetUnreachable : Error {
  using Error::Error;
};

// Invalid configuration value, rejected before any computation.
struct ConfigError : Error {
  std::string field;
  ConfigError(std::string field_name, const std::string& message)
      : Error(field_name + ": " + message), field(std::move(field_name)) {}
};

}  // namespace lambdasim
