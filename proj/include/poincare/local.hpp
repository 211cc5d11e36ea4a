#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "poincare/poly.hpp"
#include "poincare/trig.hpp"

namespace poincare {

enum class FixedPointClass {
  saddle,
  stable_node,
  unstable_node,
  stable_spiral,
  unstable_spiral,
  center_or_fine,
  degenerate
};

std::string_view to_string(FixedPointClass c);

/// Trace/determinant classification. |trace| <= trace_tol counts as zero,
/// likewise |det| <= det_tol.
FixedPointClass classify(double trace, double det, double trace_tol, double det_tol);

struct LinearizationReport {
  Vec2 point;
  double trace = 0.0;
  double det = 0.0;
  double discriminant = 0.0;
  FixedPointClass cls = FixedPointClass::degenerate;
};

/// Linearization at a rational point, computed in exact arithmetic.
struct ExactLinearization {
  Rational trace;
  Rational det;
  Rational discriminant;
  FixedPointClass cls = FixedPointClass::degenerate;
};

using JacobianPoly = std::array<std::array<BivariatePoly, 2>, 2>;

/// [[∂P/∂x, ∂P/∂y], [∂Q/∂x, ∂Q/∂y]], exact.
JacobianPoly jacobian(const PlanarPolySystem& sys);

/// Throws NotAFixedPoint when |P| + |Q| >= 1e-8 * scale at the point.
LinearizationReport linearize(const PlanarPolySystem& sys, Vec2 point);

/// Throws NotAFixedPoint unless P and Q vanish exactly at (x, y).
ExactLinearization linearize_exact(const PlanarPolySystem& sys, const Rational& x, const Rational& y);

/// Field plus its symbolic Jacobian in double precision, shared by Newton runs.
class NewtonField {
 public:
  explicit NewtonField(const PlanarPolySystem& sys);

  const PlanarPolySystem& system() const { return *sys_; }
  Vec2 field(Vec2 z) const { return sys_->field(z); }
  std::array<double, 4> jacobian(Vec2 z) const;

 private:
  const PlanarPolySystem* sys_;
  std::array<NumericPoly, 4> jac_;
};

struct NewtonOptions {
  int max_steps = 60;
  double residual_tol = 1e-13;  ///< relative to PlanarPolySystem::field_scale
  double escape_radius = 1e6;
};

struct NewtonResult {
  Vec2 point;
  double residual = 0.0;  ///< |P| + |Q| at point
  int steps = 0;
  bool converged = false;
  bool singular = false;
};

/// Damped Newton iteration from one seed.
NewtonResult newton_solve(const NewtonField& f, Vec2 seed, const NewtonOptions& opts = {});

struct Box {
  double xmin = -5.0;
  double xmax = 5.0;
  double ymin = -5.0;
  double ymax = 5.0;

  static Box square(double half) { return {-half, half, -half, half}; }
  bool contains(Vec2 p, double slack = 0.0) const {
    return p.x >= xmin - slack && p.x <= xmax + slack && p.y >= ymin - slack && p.y <= ymax + slack;
  }
};

struct FixedPoint {
  Vec2 point;
  double residual = 0.0;
};

struct FixedPointSet {
  std::vector<FixedPoint> points;  ///< sorted by (x, y)
  Box search_box;
  std::size_t seeds_used = 0;
  std::size_t seeds_singular = 0;  ///< seeds discarded on a singular Jacobian
};

inline constexpr double kDedupRadius = 1e-6;

/// Grid-seeded damped Newton over grid_n x grid_n seeds, deduplicated.
FixedPointSet find_fixed_points(const PlanarPolySystem& sys, const Box& box, int grid_n);

/// x P + y Q restricted to the circle of the given radius (r² dr/dt there).
TrigPoly radial_on_circle(const PlanarPolySystem& sys, const Rational& radius);
/// x Q − y P restricted to the circle of the given radius (r² dθ/dt there).
TrigPoly angular_on_circle(const PlanarPolySystem& sys, const Rational& radius);

struct CircleCheck {
  bool invariant = false;
  double witness_theta = 0.0;  ///< where dr/dt ≠ 0, when not invariant
};

/// Exact: the circle is invariant iff x P + y Q vanishes identically on it.
CircleCheck invariant_circle_check(const PlanarPolySystem& sys, const Rational& radius);

/// Arc of an invariant circle with the sign of dθ/dt on it.
using FlowArc = SignArc;

/// Partition of an invariant circle by the zeros of dθ/dt. Throws
/// poincare::Error if the circle is not invariant.
std::vector<FlowArc> arc_flow_signs(const PlanarPolySystem& sys, const Rational& radius);

/// Radii p/q (p <= max_num, q <= max_den) plus `extra`, deduplicated and
/// filtered to invariant circles.
std::vector<Rational> scan_invariant_circles(const PlanarPolySystem& sys, const std::vector<Rational>& extra,
                                             int max_num = 12, int max_den = 4);

}  // namespace poincare
