#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

#include "lambdasim/types.hpp"

namespace lambdasim {

struct IntegratorConfig {
  Real rel_tol = 1e-12;
  Real abs_tol = 1e-12;
  Real max_step = 0.1;    // [T units]
  int sample_count = 2001;
};

inline void validate(const IntegratorConfig& cfg) {
  if (!(cfg.rel_tol > 0.0)) throw ConfigError("rel_tol", "must be > 0");
  if (!(cfg.abs_tol > 0.0)) throw ConfigError("abs_tol", "must be > 0");
  if (!(cfg.max_step > 0.0)) throw ConfigError("max_step", "must be > 0");
  if (cfg.sample_count < 2) throw ConfigError("sample_count", "must be >= 2");
}

namespace dopri5 {

// Dormand-Prince 5(4) tableau.
inline constexpr Real c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
inline constexpr Real a21 = 1.0 / 5;
inline constexpr Real a31 = 3.0 / 40, a32 = 9.0 / 40;
inline constexpr Real a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
inline constexpr Real a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                      a53 = 64448.0 / 6561, a54 = -212.0 / 729;
inline constexpr Real a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                      a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                      a65 = -5103.0 / 18656;
inline constexpr Real b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                      b5 = -2187.0 / 6784, b6 = 11.0 / 84;
// Difference between the 5th- and embedded 4th-order weights.
inline constexpr Real e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                      e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

}  // namespace dopri5

// Advance y from t0 to t1 with adaptive Dormand-Prince 5(4) steps, landing on
// t1 exactly. rhs(t, y) returns dy/dt. h carries the step-size proposal
// across calls so consecutive sample intervals reuse the adapted step.
// Throws StepSizeUnderflow when error control pushes the step below the
// resolvable floor.
template <typename Vec, typename Rhs>
void dopri5_advance(Rhs&& rhs, Vec& y, Real t0, Real t1,
                    const IntegratorConfig& cfg, Real& h) {
  namespace tb = dopri5;
  constexpr Real eps = std::numeric_limits<Real>::epsilon();
  constexpr int n = Vec::RowsAtCompileTime;

  const Real span = t1 - t0;
  if (!(span > 0.0)) return;
  const Real h_floor = std::max(
      1e-13 * span, 8.0 * eps * std::max({std::abs(t0), std::abs(t1), 1.0}));

  if (!(h > 0.0)) h = span;
  h = std::min(h, cfg.max_step);

  Real t = t0;
  while (t < t1) {
    bool last = false;
    Real ht = std::min(h, cfg.max_step);
    if (t + ht >= t1) {
      ht = t1 - t;
      last = true;
    }

    const Vec k1 = rhs(t, y);
    const Vec k2 = rhs(t + tb::c2 * ht, Vec(y + ht * (tb::a21 * k1)));
    const Vec k3 = rhs(t + tb::c3 * ht, Vec(y + ht * (tb::a31 * k1 + tb::a32 * k2)));
    const Vec k4 = rhs(t + tb::c4 * ht,
                       Vec(y + ht * (tb::a41 * k1 + tb::a42 * k2 + tb::a43 * k3)));
    const Vec k5 = rhs(t + tb::c5 * ht,
                       Vec(y + ht * (tb::a51 * k1 + tb::a52 * k2 + tb::a53 * k3 +
                                     tb::a54 * k4)));
    const Vec k6 = rhs(t + ht, Vec(y + ht * (tb::a61 * k1 + tb::a62 * k2 +
                                             tb::a63 * k3 + tb::a64 * k4 +
                                             tb::a65 * k5)));
    const Vec y5 = y + ht * (tb::b1 * k1 + tb::b3 * k3 + tb::b4 * k4 +
                             tb::b5 * k5 + tb::b6 * k6);
    const Vec k7 = rhs(t + ht, y5);
    const Vec err_vec = ht * (tb::e1 * k1 + tb::e3 * k3 + tb::e4 * k4 +
                              tb::e5 * k5 + tb::e6 * k6 + tb::e7 * k7);

    Real err_sq = 0.0;
    for (int i = 0; i < n; ++i) {
      const Real scale =
          cfg.abs_tol +
          cfg.rel_tol * std::max(std::abs(y[i]), std::abs(y5[i]));
      const Real e = std::abs(err_vec[i]) / scale;
      err_sq += e * e;
    }
    const Real err = std::sqrt(err_sq / n);

    if (err <= 1.0) {
      y = y5;
      t = last ? t1 : t + ht;
      const Real grow =
          err > 0.0 ? std::min(5.0, std::max(0.2, 0.9 * std::pow(err, -0.2)))
                    : 5.0;
      h = std::min(ht * grow, cfg.max_step);
    } else {
      const Real shrink =
          std::isfinite(err) ? std::max(0.1, 0.9 * std::pow(err, -0.2)) : 0.1;
      h = ht * std::min(0.9, shrink);
      if (h < h_floor)
        throw StepSizeUnderflow(
            "adaptive step underflow at t = " + std::to_string(t) +
            "; system too stiff for the requested tolerances");
    }
  }
}

}  // namespace lambdasim
