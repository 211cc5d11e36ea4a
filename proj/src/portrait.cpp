#include "poincare/portrait.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "poincare/errors.hpp"
#include "poincare/infinity.hpp"
#include "poincare/kernels.hpp"
#include "poincare/local.hpp"
#include "poincare/ode.hpp"

namespace poincare {

std::string_view to_string(Termination t) {
  switch (t) {
    case Termination::time_limit: return "time_limit";
    case Termination::left_box: return "left_box";
    case Termination::near_equator: return "near_equator";
    case Termination::fixed_point: return "fixed_point";
    case Termination::step_underflow: return "step_underflow";
  }
  return "time_limit";
}

void validate(const PortraitSpec& spec) {
  if (!(spec.tol >= 1e-12 && spec.tol <= 1e-3)) throw Error("portrait: tol must lie in [1e-12, 1e-3]");
  if (!(spec.disk_margin > 0.0 && spec.disk_margin < 0.1)) throw Error("portrait: disk_margin must lie in (0, 0.1)");
  if (!(spec.t_span > 0.0)) throw Error("portrait: t_span must be positive");
}

Vec2 to_disk(Vec2 p) {
  const double k = 1.0 / std::sqrt(1.0 + p.x * p.x + p.y * p.y);
  return {p.x * k, p.y * k};
}

double equator_distance(Vec2 p) { return 1.0 / std::sqrt(1.0 + p.x * p.x + p.y * p.y); }

Trajectory integrate(const PlanarPolySystem& sys, Vec2 seed, const PortraitSpec& spec, TimeDirection dir) {
  validate(spec);
  const double sign = dir == TimeDirection::forward ? 1.0 : -1.0;
  Trajectory tr;
  tr.samples.push_back({0.0, seed.x, seed.y});

  auto speed_at = [&](Vec2 z) {
    const Vec2 f = sys.field(z);
    return std::hypot(f.x, f.y);
  };
  if (equator_distance(seed) < spec.disk_margin) {
    tr.termination = Termination::near_equator;
    return tr;
  }
  if (speed_at(seed) <= spec.fixed_point_speed) {
    tr.termination = Termination::fixed_point;
    return tr;
  }

  Termination reason = Termination::time_limit;
  auto field = [&](Vec2 z) {
    const Vec2 f = sys.field(z);
    return Vec2{sign * f.x, sign * f.y};
  };
  auto observe = [&](double t, Vec2 z) {
    if (!std::isfinite(z.x) || !std::isfinite(z.y) || std::fabs(z.x) > spec.box || std::fabs(z.y) > spec.box) {
      tr.samples.push_back({sign * t, z.x, z.y});
      reason = Termination::left_box;
      return false;
    }
    const double s = equator_distance(z);
    if (s < spec.disk_margin) {
      // Cut the last step where s crosses the margin.
      const Sample prev = tr.samples.back();
      const double s_prev = equator_distance({prev.x, prev.y});
      const double f = (s_prev - spec.disk_margin) / (s_prev - s);
      tr.samples.push_back({prev.t + f * (sign * t - prev.t), prev.x + f * (z.x - prev.x), prev.y + f * (z.y - prev.y)});
      reason = Termination::near_equator;
      return false;
    }
    tr.samples.push_back({sign * t, z.x, z.y});
    if (speed_at(z) <= spec.fixed_point_speed) {
      reason = Termination::fixed_point;
      return false;
    }
    return true;
  };

  ode::AdaptiveOptions opts;
  opts.tol = spec.tol;
  opts.max_steps = spec.max_steps;
  switch (ode::integrate(field, seed, spec.t_span, opts, observe)) {
    case ode::Outcome::stopped: tr.termination = reason; break;
    case ode::Outcome::step_underflow: tr.termination = Termination::step_underflow; break;
    case ode::Outcome::reached_end:
    case ode::Outcome::step_budget: tr.termination = Termination::time_limit; break;
  }
  return tr;
}

TrajectoryPair integrate_both(const PlanarPolySystem& sys, Vec2 seed, const PortraitSpec& spec) {
  return {integrate(sys, seed, spec, TimeDirection::backward), integrate(sys, seed, spec, TimeDirection::forward)};
}

std::vector<Vec2> portrait_seeds(const PortraitSpec& spec) {
  std::vector<Vec2> seeds = spec.seeds;
  if (spec.default_seeds) {
    for (double r : {0.5, 2.0, 6.0}) {
      for (int i = 0; i < 16; ++i) {
        const double th = 2.0 * std::numbers::pi * i / 16.0;
        seeds.push_back({r * std::cos(th), r * std::sin(th)});
      }
    }
  }
  return seeds;
}

double total_winding(const Trajectory& tr) {
  double total = 0.0;
  for (std::size_t i = 1; i < tr.samples.size(); ++i) {
    const double a0 = std::atan2(tr.samples[i - 1].y, tr.samples[i - 1].x);
    const double a1 = std::atan2(tr.samples[i].y, tr.samples[i].x);
    double d = a1 - a0;
    while (d > std::numbers::pi) d -= 2.0 * std::numbers::pi;
    while (d <= -std::numbers::pi) d += 2.0 * std::numbers::pi;
    total += std::fabs(d);
  }
  return total;
}

namespace {

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  std::string out = buf;
  // Tiny negatives print as "-0.00000".
  if (out.size() > 1 && out[0] == '-' && out.find_first_not_of("0.", 1) == std::string::npos) out.erase(0, 1);
  return out;
}

std::string disk_xy(Vec2 p) {
  const Vec2 d = to_disk(p);
  return fmt("%.5f", d.x) + "," + fmt("%.5f", -d.y);
}

std::string class_color(FixedPointClass c) {
  switch (c) {
    case FixedPointClass::stable_node:
    case FixedPointClass::stable_spiral: return "#1f5fbf";
    case FixedPointClass::unstable_node:
    case FixedPointClass::unstable_spiral: return "#c0392b";
    case FixedPointClass::saddle: return "#27864a";
    default: return "#777777";
  }
}

std::string render_svg(const PlanarPolySystem& sys, const PortraitSpec& spec, const std::vector<Vec2>& seeds,
                       const std::vector<TrajectoryPair>& trajs) {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"-1.05 -1.05 2.1 2.1\" "
         "width=\"640\" height=\"640\">\n";

  std::optional<EquatorReport> eq;
  try {
    eq = classify_infinity(sys);
  } catch (const AnalysisError&) {
  }
  const bool all_fixed = eq && eq->verdict == Verdict::all_points_fixed;
  out << "<circle class=\"equator\" cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\""
      << (all_fixed ? "#c0392b" : "#000000") << "\" stroke-width=\"" << (all_fixed ? "0.012" : "0.006") << "\"/>\n";
  if (eq && eq->verdict == Verdict::isolated_equilibria) {
    for (const auto& r : eq->roots) {
      out << "<circle class=\"equator-equilibrium\" cx=\"" << fmt("%.5f", std::cos(r.theta)) << "\" cy=\""
          << fmt("%.5f", -std::sin(r.theta)) << "\" r=\"0.018\" fill=\"#000000\"/>\n";
    }
  }

  // Invariant circles about the origin map to circles of radius R/sqrt(1+R²).
  for (const auto& r : scan_invariant_circles(sys, {})) {
    const double rr = r.get_d();
    out << "<circle class=\"invariant-circle\" cx=\"0\" cy=\"0\" r=\"" << fmt("%.5f", rr / std::sqrt(1.0 + rr * rr))
        << "\" fill=\"none\" stroke=\"#444444\" stroke-width=\"0.006\"/>\n";
  }
  for (const auto& c : spec.nullclines) {
    out << "<polyline class=\"nullcline\" fill=\"none\" stroke=\"#444444\" stroke-width=\"0.005\" "
           "stroke-dasharray=\"0.02,0.015\" points=\"";
    for (int i = 0; i <= 256; ++i) {
      const double th = 2.0 * std::numbers::pi * i / 256.0;
      out << (i ? " " : "") << disk_xy({c.cx + c.r * std::cos(th), c.cy + c.r * std::sin(th)});
    }
    out << "\"/>\n";
  }

  for (std::size_t i = 0; i < trajs.size(); ++i) {
    out << "<polyline class=\"trajectory\" data-seed=\"" << i << "\" fill=\"none\" stroke=\"#2c3e50\" "
        << "stroke-width=\"0.003\" points=\"";
    bool first = true;
    const auto& back = trajs[i].backward.samples;
    for (auto it = back.rbegin(); it != back.rend(); ++it) {
      out << (first ? "" : " ") << disk_xy({it->x, it->y});
      first = false;
    }
    for (std::size_t k = 1; k < trajs[i].forward.samples.size(); ++k) {
      const auto& s = trajs[i].forward.samples[k];
      out << " " << disk_xy({s.x, s.y});
    }
    out << "\"/>\n";
  }
  (void)seeds;

  const FixedPointSet fps = find_fixed_points(sys, Box::square(10.0), 48);
  for (const auto& fp : fps.points) {
    FixedPointClass cls = FixedPointClass::degenerate;
    try {
      cls = linearize(sys, fp.point).cls;
    } catch (const NotAFixedPoint&) {
    }
    const Vec2 d = to_disk(fp.point);
    const bool spiral = cls == FixedPointClass::stable_spiral || cls == FixedPointClass::unstable_spiral;
    out << "<circle class=\"fixed-point\" data-class=\"" << to_string(cls) << "\" cx=\"" << fmt("%.5f", d.x)
        << "\" cy=\"" << fmt("%.5f", -d.y) << "\" r=\"0.014\" fill=\"" << (spiral ? "#ffffff" : class_color(cls))
        << "\" stroke=\"" << class_color(cls) << "\" stroke-width=\"0.006\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_csv(const std::vector<TrajectoryPair>& trajs) {
  std::ostringstream out;
  out << "traj_id,t,x,y,u,v\n";
  auto row = [&](std::size_t id, const Sample& s) {
    const Vec2 d = to_disk({s.x, s.y});
    out << id << ',' << fmt("%.10g", s.t) << ',' << fmt("%.12g", s.x) << ',' << fmt("%.12g", s.y) << ','
        << fmt("%.12g", d.x) << ',' << fmt("%.12g", d.y) << '\n';
  };
  for (std::size_t i = 0; i < trajs.size(); ++i) {
    const auto& back = trajs[i].backward.samples;
    for (auto it = back.rbegin(); it != back.rend(); ++it) row(i, *it);
    for (std::size_t k = 1; k < trajs[i].forward.samples.size(); ++k) row(i, trajs[i].forward.samples[k]);
  }
  return out.str();
}

}  // namespace

std::string render(const PlanarPolySystem& sys, const PortraitSpec& spec, PortraitFormat format) {
  validate(spec);
  const std::vector<Vec2> seeds = portrait_seeds(spec);
  const auto trajs = kernels::integrate_batch(sys, seeds, spec, kernels::default_backend());
  return format == PortraitFormat::svg ? render_svg(sys, spec, seeds, trajs) : render_csv(trajs);
}

}  // namespace poincare
