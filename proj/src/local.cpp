#include "poincare/local.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "poincare/errors.hpp"
#include "poincare/kernels.hpp"

namespace poincare {

std::string_view to_string(FixedPointClass c) {
  switch (c) {
    case FixedPointClass::saddle: return "saddle";
    case FixedPointClass::stable_node: return "stable node";
    case FixedPointClass::unstable_node: return "unstable node";
    case FixedPointClass::stable_spiral: return "stable spiral";
    case FixedPointClass::unstable_spiral: return "unstable spiral";
    case FixedPointClass::center_or_fine: return "center-or-fine";
    case FixedPointClass::degenerate: return "degenerate";
  }
  return "degenerate";
}

FixedPointClass classify(double trace, double det, double trace_tol, double det_tol) {
  if (std::fabs(det) <= det_tol) return FixedPointClass::degenerate;
  if (det < 0) return FixedPointClass::saddle;
  if (std::fabs(trace) <= trace_tol) return FixedPointClass::center_or_fine;
  const double disc = trace * trace - 4.0 * det;
  if (disc < 0) return trace > 0 ? FixedPointClass::unstable_spiral : FixedPointClass::stable_spiral;
  return trace > 0 ? FixedPointClass::unstable_node : FixedPointClass::stable_node;
}

JacobianPoly jacobian(const PlanarPolySystem& sys) {
  return {{{partial_derivative(sys.p(), Var::x), partial_derivative(sys.p(), Var::y)},
           {partial_derivative(sys.q(), Var::x), partial_derivative(sys.q(), Var::y)}}};
}

LinearizationReport linearize(const PlanarPolySystem& sys, Vec2 point) {
  const Vec2 f = sys.field(point);
  const double residual = std::fabs(f.x) + std::fabs(f.y);
  if (!(residual < 1e-8 * sys.field_scale(point.x, point.y))) {
    throw NotAFixedPoint("(" + std::to_string(point.x) + ", " + std::to_string(point.y) +
                         ") is not a fixed point: |P|+|Q| = " + std::to_string(residual));
  }
  const NewtonField nf(sys);
  const auto j = nf.jacobian(point);
  LinearizationReport r;
  r.point = point;
  r.trace = j[0] + j[3];
  r.det = j[0] * j[3] - j[1] * j[2];
  r.discriminant = r.trace * r.trace - 4.0 * r.det;
  const double entries = std::fabs(j[0]) + std::fabs(j[1]) + std::fabs(j[2]) + std::fabs(j[3]);
  const double tol = 1e-9 * (1.0 + entries);
  r.cls = classify(r.trace, r.det, tol, tol);
  return r;
}

ExactLinearization linearize_exact(const PlanarPolySystem& sys, const Rational& x, const Rational& y) {
  if (sys.p().evaluate(x, y) != 0 || sys.q().evaluate(x, y) != 0) {
    throw NotAFixedPoint("(" + x.get_str() + ", " + y.get_str() + ") is not an exact fixed point");
  }
  const JacobianPoly jp = jacobian(sys);
  const Rational a = jp[0][0].evaluate(x, y), b = jp[0][1].evaluate(x, y);
  const Rational c = jp[1][0].evaluate(x, y), d = jp[1][1].evaluate(x, y);
  ExactLinearization r;
  r.trace = a + d;
  r.det = a * d - b * c;
  r.discriminant = r.trace * r.trace - 4 * r.det;
  if (r.det == 0) {
    r.cls = FixedPointClass::degenerate;
  } else if (r.det < 0) {
    r.cls = FixedPointClass::saddle;
  } else if (r.trace == 0) {
    r.cls = FixedPointClass::center_or_fine;
  } else if (r.discriminant < 0) {
    r.cls = r.trace > 0 ? FixedPointClass::unstable_spiral : FixedPointClass::stable_spiral;
  } else {
    r.cls = r.trace > 0 ? FixedPointClass::unstable_node : FixedPointClass::stable_node;
  }
  return r;
}

NewtonField::NewtonField(const PlanarPolySystem& sys) : sys_(&sys) {
  const JacobianPoly j = poincare::jacobian(sys);
  jac_ = {NumericPoly(j[0][0]), NumericPoly(j[0][1]), NumericPoly(j[1][0]), NumericPoly(j[1][1])};
}

std::array<double, 4> NewtonField::jacobian(Vec2 z) const {
  return {jac_[0](z.x, z.y), jac_[1](z.x, z.y), jac_[2](z.x, z.y), jac_[3](z.x, z.y)};
}

NewtonResult newton_solve(const NewtonField& f, Vec2 seed, const NewtonOptions& opts) {
  const PlanarPolySystem& sys = f.system();
  NewtonResult r;
  Vec2 z = seed;
  Vec2 fz = f.field(z);
  double res = std::fabs(fz.x) + std::fabs(fz.y);

  for (int step = 0; step <= opts.max_steps; ++step) {
    r.steps = step;
    const double scale = sys.field_scale(z.x, z.y);
    if (res <= opts.residual_tol * scale) {
      r.converged = true;
      break;
    }
    if (step == opts.max_steps) break;

    const auto j = f.jacobian(z);
    const double det = j[0] * j[3] - j[1] * j[2];
    const double jn = std::max({std::fabs(j[0]), std::fabs(j[1]), std::fabs(j[2]), std::fabs(j[3])});
    if (jn == 0.0 || std::fabs(det) <= 1e-14 * jn * jn) {
      r.singular = true;
      break;
    }
    const Vec2 delta{(j[3] * fz.x - j[1] * fz.y) / det, (-j[2] * fz.x + j[0] * fz.y) / det};

    // Halve the step until the residual decreases.
    double lambda = 1.0;
    Vec2 trial{};
    Vec2 ftrial{};
    double rtrial = 0.0;
    for (int k = 0; k < 30; ++k) {
      trial = {z.x - lambda * delta.x, z.y - lambda * delta.y};
      ftrial = f.field(trial);
      rtrial = std::fabs(ftrial.x) + std::fabs(ftrial.y);
      if (rtrial < res) break;
      lambda *= 0.5;
    }
    const double moved = lambda * std::hypot(delta.x, delta.y);
    if (!(rtrial < res)) {
      // Stuck at the rounding floor; accept if the residual is already tiny.
      r.converged = res <= 1e-9 * scale;
      break;
    }
    z = trial;
    fz = ftrial;
    res = rtrial;
    if (!std::isfinite(z.x) || !std::isfinite(z.y) || std::hypot(z.x, z.y) > opts.escape_radius) break;
    if (moved <= 1e-15 * (1.0 + std::hypot(z.x, z.y)) && res <= 1e-9 * sys.field_scale(z.x, z.y)) {
      r.converged = true;
      break;
    }
  }
  r.point = z;
  r.residual = res;
  return r;
}

FixedPointSet find_fixed_points(const PlanarPolySystem& sys, const Box& box, int grid_n) {
  if (grid_n < 8) throw Error("find_fixed_points: grid_n must be at least 8");
  if (!(box.xmax > box.xmin) || !(box.ymax > box.ymin)) throw Error("find_fixed_points: empty search box");

  std::vector<Vec2> seeds;
  seeds.reserve(static_cast<std::size_t>(grid_n) * static_cast<std::size_t>(grid_n));
  const double dx = (box.xmax - box.xmin) / (grid_n - 1);
  const double dy = (box.ymax - box.ymin) / (grid_n - 1);
  for (int i = 0; i < grid_n; ++i) {
    for (int j = 0; j < grid_n; ++j) seeds.push_back({box.xmin + dx * i, box.ymin + dy * j});
  }

  const NewtonField nf(sys);
  const auto results = kernels::newton_batch(nf, seeds, NewtonOptions{}, kernels::default_backend());

  FixedPointSet out;
  out.search_box = box;
  out.seeds_used = seeds.size();
  for (const auto& r : results) {
    if (r.singular) ++out.seeds_singular;
    if (!r.converged || !box.contains(r.point, 1e-9)) continue;
    auto near = std::find_if(out.points.begin(), out.points.end(), [&](const FixedPoint& p) {
      return std::hypot(p.point.x - r.point.x, p.point.y - r.point.y) < kDedupRadius;
    });
    if (near == out.points.end()) {
      out.points.push_back({r.point, r.residual});
    } else if (r.residual < near->residual) {
      *near = {r.point, r.residual};
    }
  }
  std::sort(out.points.begin(), out.points.end(), [](const FixedPoint& a, const FixedPoint& b) {
    if (a.point.x != b.point.x) return a.point.x < b.point.x;
    return a.point.y < b.point.y;
  });
  return out;
}

TrigPoly radial_on_circle(const PlanarPolySystem& sys, const Rational& radius) {
  const BivariatePoly x = BivariatePoly::var_x(), y = BivariatePoly::var_y();
  return restrict_to_circle(x * sys.p() + y * sys.q(), radius);
}

TrigPoly angular_on_circle(const PlanarPolySystem& sys, const Rational& radius) {
  const BivariatePoly x = BivariatePoly::var_x(), y = BivariatePoly::var_y();
  return restrict_to_circle(x * sys.q() - y * sys.p(), radius);
}

CircleCheck invariant_circle_check(const PlanarPolySystem& sys, const Rational& radius) {
  if (radius <= 0) throw Error("invariant_circle_check: radius must be positive");
  const TrigPoly radial = radial_on_circle(sys, radius);
  CircleCheck out;
  if (radial.is_zero()) {
    out.invariant = true;
    return out;
  }
  double best = -1.0;
  for (int i = 0; i < 64; ++i) {
    const double theta = 2.0 * std::numbers::pi * i / 64.0;
    const double v = std::fabs(radial(theta));
    if (v > best) {
      best = v;
      out.witness_theta = theta;
    }
  }
  return out;
}

std::vector<FlowArc> arc_flow_signs(const PlanarPolySystem& sys, const Rational& radius) {
  if (!invariant_circle_check(sys, radius).invariant) {
    throw Error("arc_flow_signs: circle of radius " + radius.get_str() + " is not invariant");
  }
  const TrigPoly angular = angular_on_circle(sys, radius);
  if (angular.is_zero()) return {FlowArc{0.0, 2.0 * std::numbers::pi, 0}};
  return sign_arcs(angular, roots_on_circle(angular).roots);
}

std::vector<Rational> scan_invariant_circles(const PlanarPolySystem& sys, const std::vector<Rational>& extra,
                                             int max_num, int max_den) {
  std::set<Rational> radii;
  for (int q = 1; q <= max_den; ++q) {
    for (int p = 1; p <= max_num; ++p) radii.insert(make_rational(p, q));
  }
  for (const auto& r : extra) {
    if (r > 0) radii.insert(r);
  }
  std::vector<Rational> out;
  for (const auto& r : radii) {
    if (invariant_circle_check(sys, r).invariant) out.push_back(r);
  }
  return out;
}

}  // namespace poincare
