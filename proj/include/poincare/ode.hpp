#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "poincare/poly.hpp"

namespace poincare::ode {

enum class Outcome { reached_end, stopped, step_underflow, step_budget };

struct AdaptiveOptions {
  double tol = 1e-9;        ///< local error per step, mixed absolute/relative
  double min_step = 1e-14;  ///< smaller required steps end with step_underflow
  double max_step = 0.0;    ///< 0: unbounded
  std::size_t max_steps = 1'000'000;
};

struct Stats {
  std::size_t accepted = 0;
  std::size_t rejected = 0;
};

namespace detail {

inline Vec2 axpy(Vec2 y, double h, Vec2 k) { return {y.x + h * k.x, y.y + h * k.y}; }

}  // namespace detail

/// Dormand–Prince 5(4) with a PI step controller, for autonomous planar
/// fields. `field(Vec2) -> Vec2`; `observe(t, y) -> bool` is called after
/// every accepted step and returns false to stop. Integrates from t = 0 to
/// t_end (t_end > 0).
template <class Field, class Observer>
Outcome integrate(Field&& field, Vec2 y, double t_end, const AdaptiveOptions& opts, Observer&& observe,
                  Stats* stats = nullptr) {
  // Butcher tableau (Dormand & Prince 1980).
  constexpr double a21 = 1.0 / 5;
  constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                   a65 = -5103.0 / 18656;
  constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                   e6 = 22.0 / 525, e7 = -1.0 / 40;

  constexpr double safety = 0.9, fac_min = 0.2, fac_max = 5.0;
  constexpr double beta = 0.04, alpha = 0.2 - 0.75 * beta;

  double t = 0.0;
  Vec2 k1 = field(y);
  const double speed = std::hypot(k1.x, k1.y);
  double h = speed > 0 ? 1e-2 * (1.0 + std::hypot(y.x, y.y)) / speed : t_end;
  h = std::min(h, t_end);
  if (opts.max_step > 0) h = std::min(h, opts.max_step);
  double err_old = 1e-4;

  std::size_t steps = 0;
  while (t < t_end) {
    if (steps++ >= opts.max_steps) return Outcome::step_budget;
    bool last = false;
    if (t + h >= t_end) {
      h = t_end - t;
      last = true;
    }
    if (h < opts.min_step) return Outcome::step_underflow;

    using detail::axpy;
    const Vec2 k2 = field(axpy(y, h * a21, k1));
    const Vec2 k3 = field({y.x + h * (a31 * k1.x + a32 * k2.x), y.y + h * (a31 * k1.y + a32 * k2.y)});
    const Vec2 k4 = field({y.x + h * (a41 * k1.x + a42 * k2.x + a43 * k3.x),
                           y.y + h * (a41 * k1.y + a42 * k2.y + a43 * k3.y)});
    const Vec2 k5 = field({y.x + h * (a51 * k1.x + a52 * k2.x + a53 * k3.x + a54 * k4.x),
                           y.y + h * (a51 * k1.y + a52 * k2.y + a53 * k3.y + a54 * k4.y)});
    const Vec2 k6 = field({y.x + h * (a61 * k1.x + a62 * k2.x + a63 * k3.x + a64 * k4.x + a65 * k5.x),
                           y.y + h * (a61 * k1.y + a62 * k2.y + a63 * k3.y + a64 * k4.y + a65 * k5.y)});
    const Vec2 y_new{y.x + h * (b1 * k1.x + b3 * k3.x + b4 * k4.x + b5 * k5.x + b6 * k6.x),
                     y.y + h * (b1 * k1.y + b3 * k3.y + b4 * k4.y + b5 * k5.y + b6 * k6.y)};
    const Vec2 k7 = field(y_new);
    const Vec2 err{h * (e1 * k1.x + e3 * k3.x + e4 * k4.x + e5 * k5.x + e6 * k6.x + e7 * k7.x),
                   h * (e1 * k1.y + e3 * k3.y + e4 * k4.y + e5 * k5.y + e6 * k6.y + e7 * k7.y)};

    const double sx = opts.tol * (1.0 + std::max(std::fabs(y.x), std::fabs(y_new.x)));
    const double sy = opts.tol * (1.0 + std::max(std::fabs(y.y), std::fabs(y_new.y)));
    double err_norm = std::max(std::fabs(err.x) / sx, std::fabs(err.y) / sy);
    if (!std::isfinite(err_norm)) err_norm = 1e10;

    if (err_norm <= 1.0) {
      t = last ? t_end : t + h;
      y = y_new;
      k1 = k7;
      if (stats) ++stats->accepted;
      if (!observe(t, y)) return Outcome::stopped;
      const double e = std::max(err_norm, 1e-10);
      double fac = safety * std::pow(e, -alpha) * std::pow(err_old, beta);
      fac = std::clamp(fac, fac_min, fac_max);
      err_old = e;
      h *= fac;
    } else {
      if (stats) ++stats->rejected;
      const double fac = std::max(fac_min, safety * std::pow(err_norm, -alpha));
      h *= fac;
    }
    if (opts.max_step > 0) h = std::min(h, opts.max_step);
  }
  return Outcome::reached_end;
}

}  // namespace poincare::ode
