#pragma once

#include <cmath>

#include "lambdasim/pulse.hpp"
#include "lambdasim/types.hpp"

namespace lambdasim {

// One experiment: pulse pair, single-photon detuning, decay rate out of |2>,
// and the integration window. All rates in units of 1/T; hbar = 1.
struct LambdaParams {
  PulseSpec pulse;
  Real delta = 0.0;    // single-photon detuning [1/T]
  Real gamma = 0.0;    // decay rate of |2> out of the manifold [1/T], >= 0
  Real t_start = -6.0;
  Real t_end = 6.0;
};

inline void validate(const LambdaParams& params) {
  validate(params.pulse);
  if (!(params.gamma >= 0.0))
    throw ConfigError("gammaT", "decay rate must be >= 0");
  if (!std::isfinite(params.delta))
    throw ConfigError("deltaT", "detuning must be finite");
  if (!(params.t_start < params.t_end))
    throw ConfigError("t_start", "integration window requires t_start < t_end");
}

// H(t)/hbar with the hbar/2 prefactor absorbed:
//   [[0,        Op(t)/2,            0      ],
//    [Op(t)/2, (delta - i*gamma)/2, Os(t)/2],
//    [0,        Os(t)/2,            0      ]].
// Complex-symmetric; the only non-Hermitian entry is (1,1) with imaginary
// part -gamma/2.
inline Matrix3c hamiltonian_at(const LambdaParams& params, Real t) {
  const Real half_pump = 0.5 * params.pulse.pump(t);
  const Real half_stokes = 0.5 * params.pulse.stokes(t);
  Matrix3c h = Matrix3c::Zero();
  h(0, 1) = half_pump;
  h(1, 0) = half_pump;
  h(1, 2) = half_stokes;
  h(2, 1) = half_stokes;
  h(1, 1) = Complex{0.5 * params.delta, -0.5 * params.gamma};
  return h;
}

// Orthogonal involution mapping (c_b, c2, c_d) -> (c1, c2, c3), Eq.-form
//   [[sin, 0,  cos],
//    [0,   1,  0  ],
//    [cos, 0, -sin]].
// Being symmetric and orthogonal it is its own inverse, so the same matrix
// also maps bare amplitudes to the bright/dark basis.
template <typename T>
Eigen::Matrix<T, 3, 3> bright_dark_matrix(T theta) {
  const T s = std::sin(theta);
  const T c = std::cos(theta);
  Eigen::Matrix<T, 3, 3> m;
  m << s, T(0), c,
       T(0), T(1), T(0),
       c, T(0), -s;
  return m;
}

inline BrightDarkAmplitudes to_bright_dark(const Amplitudes& amps,
                                           MixingAngle angle) {
  const Real s = angle.sin();
  const Real c = angle.cos();
  return {s * amps[0] + c * amps[2], amps[1], c * amps[0] - s * amps[2]};
}

inline Amplitudes from_bright_dark(const BrightDarkAmplitudes& bd,
                                   MixingAngle angle) {
  const Real s = angle.sin();
  const Real c = angle.cos();
  return {s * bd[0] + c * bd[2], bd[1], c * bd[0] - s * bd[2]};
}

}  // namespace lambdasim
