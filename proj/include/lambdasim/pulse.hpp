#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

#include "lambdasim/types.hpp"

namespace lambdasim {

enum class EnvelopeKind { Gaussian, Constant, Custom };

// Pump and Stokes pulses sharing one peak-normalized envelope f(t):
//   Omega_p(t) = omega_p0 * f(t),  Omega_s(t) = omega_s0 * f(t).
// Gaussian: f(t) = exp(-(t/T)^2). Constant: f(t) = 1. Custom: uniformly
// sampled table on [custom_t0, custom_t0 + (n-1)*custom_dt], linearly
// interpolated, zero outside.
struct PulseSpec {
  EnvelopeKind envelope = EnvelopeKind::Gaussian;
  Real omega_p0 = 0.0;  // peak pump Rabi frequency [1/T]
  Real omega_s0 = 0.0;  // peak Stokes Rabi frequency [1/T]
  Real T = 1.0;         // characteristic pulse duration

  Real custom_t0 = 0.0;
  Real custom_dt = 0.0;
  std::vector<Real> custom_values;

  static PulseSpec gaussian(Real omega_p0, Real omega_s0, Real T = 1.0);
  static PulseSpec constant(Real omega_p0, Real omega_s0, Real T = 1.0);
  static PulseSpec custom(Real omega_p0, Real omega_s0, std::vector<Real> values,
                          Real t0, Real dt, Real T = 1.0);

  Real envelope_value(Real t) const;
  Real pump(Real t) const { return omega_p0 * envelope_value(t); }
  Real stokes(Real t) const { return omega_s0 * envelope_value(t); }
};

void validate(const PulseSpec& pulse);

// Mixing angle theta in [0, pi/2] with tan(theta) = omega_p0 / omega_s0.
// Constant in time because both pulses share one envelope.
struct MixingAngle {
  Real theta = 0.0;

  Real sin() const { return std::sin(theta); }
  Real cos() const { return std::cos(theta); }
};

MixingAngle mixing_angle(const PulseSpec& pulse);

// Effective bright-state coupling sqrt(Omega_p(t)^2 + Omega_s(t)^2).
Real effective_coupling(const PulseSpec& pulse, Real t);

// Pulse pair for a sweep-axis value omega0 and a mixing angle theta:
//   omega_p0 = sqrt(2)*omega0*sin(theta), omega_s0 = sqrt(2)*omega0*cos(theta).
// The effective peak coupling is sqrt(2)*omega0 for every theta, and at
// theta = pi/4 the pair reduces to equal peaks omega_p0 = omega_s0 = omega0.
PulseSpec pulses_for_omega0(Real omega0, Real theta, EnvelopeKind envelope,
                            Real T = 1.0, std::vector<Real> custom_values = {},
                            Real custom_t0 = 0.0, Real custom_dt = 0.0);

inline PulseSpec PulseSpec::gaussian(Real omega_p0, Real omega_s0, Real T) {
  PulseSpec p;
  p.envelope = EnvelopeKind::Gaussian;
  p.omega_p0 = omega_p0;
  p.omega_s0 = omega_s0;
  p.T = T;
  validate(p);
  return p;
}

inline PulseSpec PulseSpec::constant(Real omega_p0, Real omega_s0, Real T) {
  PulseSpec p;
  p.envelope = EnvelopeKind::Constant;
  p.omega_p0 = omega_p0;
  p.omega_s0 = omega_s0;
  p.T = T;
  validate(p);
  return p;
}

inline PulseSpec PulseSpec::custom(Real omega_p0, Real omega_s0,
                                   std::vector<Real> values, Real t0, Real dt,
                                   Real T) {
  PulseSpec p;
  p.envelope = EnvelopeKind::Custom;
  p.omega_p0 = omega_p0;
  p.omega_s0 = omega_s0;
  p.custom_values = std::move(values);
  p.custom_t0 = t0;
  p.custom_dt = dt;
  p.T = T;
  validate(p);
  return p;
}

inline void validate(const PulseSpec& pulse) {
  if (!(pulse.omega_p0 >= 0.0))
    throw ConfigError("omega_p0", "peak pump Rabi frequency must be >= 0");
  if (!(pulse.omega_s0 >= 0.0))
    throw ConfigError("omega_s0", "peak Stokes Rabi frequency must be >= 0");
  if (!(pulse.omega_p0 + pulse.omega_s0 > 0.0))
    throw ConfigError("omega_p0", "at least one pulse amplitude must be positive");
  if (!(pulse.T > 0.0)) throw ConfigError("T", "pulse duration must be > 0");
  if (pulse.envelope == EnvelopeKind::Custom) {
    if (pulse.custom_values.empty())
      throw ConfigError("envelope_values", "custom envelope table is empty");
    if (pulse.custom_values.size() > 1 && !(pulse.custom_dt > 0.0))
      throw ConfigError("envelope_dt", "custom envelope sample spacing must be > 0");
  }
}

inline Real PulseSpec::envelope_value(Real t) const {
  switch (envelope) {
    case EnvelopeKind::Gaussian: {
      const Real x = t / T;
      return std::exp(-x * x);
    }
    case EnvelopeKind::Constant:
      return 1.0;
    case EnvelopeKind::Custom: {
      if (custom_values.size() == 1)
        return t == custom_t0 ? custom_values.front() : 0.0;
      const Real u = (t - custom_t0) / custom_dt;
      if (u < 0.0 || u > static_cast<Real>(custom_values.size() - 1)) return 0.0;
      const auto k = static_cast<std::size_t>(u);
      if (k + 1 >= custom_values.size()) return custom_values.back();
      const Real w = u - static_cast<Real>(k);
      return (1.0 - w) * custom_values[k] + w * custom_values[k + 1];
    }
  }
  return 0.0;
}

inline MixingAngle mixing_angle(const PulseSpec& pulse) {
  if (pulse.omega_p0 == 0.0 && pulse.omega_s0 == 0.0)
    throw DegeneratePulse("mixing angle undefined for zero pulse amplitudes");
  return MixingAngle{std::atan2(pulse.omega_p0, pulse.omega_s0)};
}

inline Real effective_coupling(const PulseSpec& pulse, Real t) {
  return std::hypot(pulse.pump(t), pulse.stokes(t));
}

inline PulseSpec pulses_for_omega0(Real omega0, Real theta,
                                   EnvelopeKind envelope, Real T,
                                   std::vector<Real> custom_values,
                                   Real custom_t0, Real custom_dt) {
  const Real eff = std::numbers::sqrt2_v<Real> * omega0;
  PulseSpec p;
  p.envelope = envelope;
  p.omega_p0 = eff * std::sin(theta);
  p.omega_s0 = eff * std::cos(theta);
  p.T = T;
  p.custom_values = std::move(custom_values);
  p.custom_t0 = custom_t0;
  p.custom_dt = custom_dt;
  validate(p);
  return p;
}

}  // namespace lambdasim
