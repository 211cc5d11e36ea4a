#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "poincare/poly.hpp"

namespace poincare {

enum class Termination { time_limit, left_box, near_equator, fixed_point, step_underflow };
std::string_view to_string(Termination t);

struct Sample {
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;
};

/// Samples are the seed followed by every accepted integrator step, in the
/// order visited; t is negative for backward runs.
struct Trajectory {
  std::vector<Sample> samples;
  Termination termination = Termination::time_limit;
};

struct TrajectoryPair {
  Trajectory backward;
  Trajectory forward;
};

struct CircleOverlay {
  double cx = 0.0;
  double cy = 0.0;
  double r = 1.0;
};

struct PortraitSpec {
  std::vector<Vec2> seeds;
  bool default_seeds = true;   ///< add 16 seeds on each of r = 0.5, 2, 6
  double t_span = 20.0;        ///< per direction
  double tol = 1e-9;
  double disk_margin = 0.02;   ///< stop once s = 1/sqrt(1+r²) drops below this
  double box = 1e8;            ///< stop once |x| or |y| exceeds this
  double fixed_point_speed = 1e-10;
  std::size_t max_steps = 200'000;  ///< a spent budget is reported as time_limit
  std::vector<CircleOverlay> nullclines;  ///< drawn dashed
};

enum class TimeDirection { forward, backward };

/// Throws poincare::Error for tol outside [1e-12, 1e-3] or disk_margin
/// outside (0, 0.1).
void validate(const PortraitSpec& spec);

Trajectory integrate(const PlanarPolySystem& sys, Vec2 seed, const PortraitSpec& spec, TimeDirection dir);
TrajectoryPair integrate_both(const PlanarPolySystem& sys, Vec2 seed, const PortraitSpec& spec);

/// Seeds actually used for a spec: user seeds, then the default rings.
std::vector<Vec2> portrait_seeds(const PortraitSpec& spec);

/// Central projection onto the Poincaré disk: (x, y) / sqrt(1 + x² + y²).
Vec2 to_disk(Vec2 p);

/// s = 1 / sqrt(1 + x² + y²), the distance-to-equator coordinate.
double equator_distance(Vec2 p);

enum class PortraitFormat { svg, csv };

/// SVG or CSV document for the global phase portrait.
std::string render(const PlanarPolySystem& sys, const PortraitSpec& spec, PortraitFormat format);

/// Total |Δθ| accumulated along the samples (unwrapped polar angle).
double total_winding(const Trajectory& tr);

}  // namespace poincare
