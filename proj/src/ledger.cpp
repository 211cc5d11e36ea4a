#include "poincare/ledger.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "poincare/errors.hpp"
#include "poincare/infinity.hpp"
#include "poincare/local.hpp"
#include "poincare/modification.hpp"
#include "poincare/ode.hpp"

namespace poincare {

std::string_view to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::holds: return "holds";
    case ClaimStatus::paper_error_corrected: return "paper_error_corrected";
    case ClaimStatus::numerically_supported: return "numerically_supported";
    case ClaimStatus::deviates: return "deviates";
  }
  return "deviates";
}

std::string_view to_string(ClaimKind k) {
  switch (k) {
    case ClaimKind::equator_verdict: return "equator_verdict";
    case ClaimKind::fixed_point_class: return "fixed_point_class";
    case ClaimKind::fixed_point_set: return "fixed_point_set";
    case ClaimKind::invariant_circle: return "invariant_circle";
    case ClaimKind::conserved_identity: return "conserved_identity";
    case ClaimKind::numeric_evidence: return "numeric_evidence";
  }
  return "numeric_evidence";
}

bool Ledger::all_match() const {
  return std::all_of(results.begin(), results.end(), [](const ClaimResult& r) { return r.matches(); });
}

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

ClaimOutcome ok_if(bool ok, ClaimStatus when_ok, std::string evidence) {
  return {ok ? when_ok : ClaimStatus::deviates, std::move(evidence)};
}

std::string verdict_text(const EquatorReport& r) {
  std::string s = "k=" + (r.k ? std::to_string(*r.k) : std::string("undefined")) + ", " + std::string(to_string(r.verdict));
  if (r.verdict == Verdict::cycle_at_infinity) s += " " + std::string(to_string(r.limit));
  return s;
}

// Expected: attracting cycle at infinity.
ClaimOutcome cycle_at_infinity(const PlanarPolySystem& sys) {
  const EquatorReport r = classify_infinity(sys);
  return ok_if(r.verdict == Verdict::cycle_at_infinity && r.limit == CycleLimit::attracting, ClaimStatus::holds,
               verdict_text(r));
}

// Stated as an attracting cycle at infinity but expected to be a fixed-point
// equator. A genuine attracting cycle evaluates as holds, which deviates.
ClaimOutcome corrected_equator(const PlanarPolySystem& sys) {
  const EquatorReport r = classify_infinity(sys);
  if (r.verdict == Verdict::all_points_fixed) {
    return {ClaimStatus::paper_error_corrected, verdict_text(r) + "; G identically zero: " + (r.g.is_zero() ? "yes" : "no")};
  }
  if (r.verdict == Verdict::cycle_at_infinity && r.limit == CycleLimit::attracting) {
    return {ClaimStatus::holds, verdict_text(r) + " (the original statement)"};
  }
  return {ClaimStatus::deviates, verdict_text(r)};
}

std::string lin_text(FixedPointClass cls, double trace, double det) {
  return std::string(to_string(cls)) + " (trace " + fmt("%.10g", trace) + ", det " + fmt("%.10g", det) + ")";
}

ClaimOutcome exact_class(const PlanarPolySystem& sys, const Rational& x, const Rational& y, FixedPointClass want) {
  const ExactLinearization l = linearize_exact(sys, x, y);
  return ok_if(l.cls == want, ClaimStatus::holds, lin_text(l.cls, l.trace.get_d(), l.det.get_d()));
}

ClaimOutcome numeric_classes(const PlanarPolySystem& sys, const std::vector<std::pair<Vec2, FixedPointClass>>& want) {
  bool ok = true;
  std::string ev;
  for (const auto& [p, cls] : want) {
    const LinearizationReport l = linearize(sys, p);
    ok = ok && l.cls == cls;
    if (!ev.empty()) ev += "; ";
    ev += "(" + fmt("%.6g", p.x) + ", " + fmt("%.6g", p.y) + "): " + lin_text(l.cls, l.trace, l.det);
  }
  return ok_if(ok, ClaimStatus::holds, ev);
}

int certified_sign(const TrigPoly& t) {
  if (t.is_zero()) return 0;
  const MinAbsBound b = certified_min_abs(t);
  if (b.status != MinAbsStatus::certified) return 0;
  return t(0.0) > 0.0 ? 1 : -1;
}

/// Circle of radius r is invariant, free of equilibria, and dr/dt has the
/// given signs at radii `inside` and `outside`.
ClaimOutcome limit_cycle_circle(const PlanarPolySystem& sys, const Rational& r, const Rational& inside,
                                const Rational& outside, bool attracting) {
  if (!invariant_circle_check(sys, r).invariant) return {ClaimStatus::deviates, "circle r=" + r.get_str() + " not invariant"};
  const int ang = certified_sign(angular_on_circle(sys, r));
  const int in = certified_sign(radial_on_circle(sys, inside));
  const int out = certified_sign(radial_on_circle(sys, outside));
  const bool ok = ang != 0 && (attracting ? (in > 0 && out < 0) : (in < 0 && out > 0));
  return ok_if(ok, ClaimStatus::holds,
               "r=" + r.get_str() + " invariant (exact); dθ/dt sign " + std::to_string(ang) + "; dr/dt sign at r=" +
                   inside.get_str() + ": " + std::to_string(in) + ", at r=" + outside.get_str() + ": " + std::to_string(out));
}

ClaimOutcome heteroclinic_r3(const PlanarPolySystem& sys) {
  if (!invariant_circle_check(sys, 3).invariant) return {ClaimStatus::deviates, "circle r=3 not invariant"};
  const auto arcs = arc_flow_signs(sys, 3);
  const double ta = std::atan2(std::sqrt(35.0) / 2.0, 0.5);
  const double tb = kTwoPi - ta;
  bool ok = arcs.size() == 2;
  std::string ev = "r=3 invariant (exact); " + std::to_string(arcs.size()) + " arcs";
  for (const auto& a : arcs) {
    const double from = std::fmod(a.from, kTwoPi);
    const bool starts_at_endpoint = std::fabs(from - ta) < 1e-9 || std::fabs(from - tb) < 1e-9;
    const double mid = std::fmod(0.5 * (a.from + a.to), kTwoPi);
    const bool left = std::cos(mid) < 0.0;
    ok = ok && starts_at_endpoint && (left ? a.sign > 0 : a.sign < 0);
    ev += "; [" + fmt("%.9f", a.from) + ", " + fmt("%.9f", a.to) + "] sign " + std::to_string(a.sign);
  }
  return ok_if(ok, ClaimStatus::holds, ev);
}

ClaimOutcome p5_fixed_point_set(const PlanarPolySystem& sys) {
  const FixedPointSet s = find_fixed_points(sys, Box::square(3.0), 64);
  const double ys = 1.0 / std::sqrt(2.0);
  bool ok = s.points.size() == 3;
  for (Vec2 e : {Vec2{0.0, 0.0}, Vec2{0.0, ys}, Vec2{0.0, -ys}}) {
    ok = ok && std::any_of(s.points.begin(), s.points.end(), [&](const FixedPoint& f) {
           return std::hypot(f.point.x - e.x, f.point.y - e.y) < 1e-10;
         });
  }
  return ok_if(ok, ClaimStatus::holds,
               std::to_string(s.points.size()) + " fixed points in [-3,3]² (64×64 Newton seeds): expected (0,0), (0,±1/√2)");
}

FixedPointClass spiral_class(const Rational& c) {
  return c < make_rational(-1, 4) ? FixedPointClass::unstable_spiral : FixedPointClass::stable_spiral;
}

bool conserved_identity_holds(const PlanarPolySystem& sys, const Rational& c) {
  const BivariatePoly a = p5_a(), b = p5_b();
  return conserved_quantity_residual(sys, p5_c(c), BivariatePoly(2) * (a * a + b * b)).is_zero();
}

struct Run {
  double winding = 0.0;  ///< |Δ angle| about the chosen centre
  double c_start = 0.0;
  double c_end = 0.0;
  double min_dist = 0.0;  ///< to the chosen centre
  double t = 0.0;
};

/// Integrates from `start` in direction `sign` until `stop` says so or t_end.
template <class Stop>
Run run(const PlanarPolySystem& sys, const NumericPoly& cq, Vec2 start, Vec2 centre, double sign, double t_end,
        Stop&& stop) {
  Run r;
  r.c_start = cq(start.x, start.y);
  r.min_dist = std::hypot(start.x - centre.x, start.y - centre.y);
  double prev = std::atan2(start.y - centre.y, start.x - centre.x);
  ode::AdaptiveOptions opts;
  opts.tol = 1e-11;
  opts.max_steps = 2'000'000;
  auto field = [&](Vec2 z) {
    const Vec2 f = sys.field(z);
    return Vec2{sign * f.x, sign * f.y};
  };
  Vec2 last = start;
  ode::integrate(field, start, t_end, opts, [&](double t, Vec2 z) {
    const double ang = std::atan2(z.y - centre.y, z.x - centre.x);
    double d = ang - prev;
    while (d > std::numbers::pi) d -= kTwoPi;
    while (d <= -std::numbers::pi) d += kTwoPi;
    r.winding += std::fabs(d);
    prev = ang;
    r.min_dist = std::min(r.min_dist, std::hypot(z.x - centre.x, z.y - centre.y));
    r.t = t;
    last = z;
    return std::isfinite(z.x) && std::isfinite(z.y) && !stop(r);
  });
  r.c_end = cq(last.x, last.y);
  return r;
}

/// Repelling closed orbit on the oval C = 0 through (0, y_on) around `centre`:
/// it contains no equilibrium, and in backward time nearby starts on both sides
/// wind around `centre` while |C| decays toward the oval.
bool repelling_oval(const PlanarPolySystem& sys, const Rational& c, double y_on, Vec2 centre, std::string& ev) {
  const NumericPoly cq(p5_c(c));
  bool ok = true;
  for (double delta : {-0.02, 0.02}) {
    const Vec2 start{0.0, y_on + delta};
    const Run r = run(sys, cq, start, centre, -1.0, 200.0, [](const Run& s) { return s.winding >= 8.0 * kTwoPi; });
    const bool good = r.winding >= 8.0 * kTwoPi && std::fabs(r.c_end) < 1e-3 * std::fabs(r.c_start);
    ok = ok && good;
    ev += "; backward from (0, " + fmt("%.4f", start.y) + "): " + fmt("%.2f", r.winding / kTwoPi) + " turns, |C| " +
          fmt("%.2e", std::fabs(r.c_start)) + " -> " + fmt("%.2e", std::fabs(r.c_end));
  }
  return ok;
}

double oval_y(const Rational& c, double sign_root) {
  // C(0, y) = y⁴ − y² − c = 0.
  return std::sqrt((1.0 + sign_root * std::sqrt(1.0 + 4.0 * c.get_d())) / 2.0);
}

bool equilibria_off_curve(const Rational& c, std::string& ev) {
  // C at (0,0) is −c and at (0, ±1/√2) is −1/4 − c, both exact.
  const Rational at_origin = -c;
  const Rational at_spirals = make_rational(-1, 4) - c;
  ev += "C(0,0) = " + at_origin.get_str() + ", C(0,±1/√2) = " + at_spirals.get_str();
  return at_origin != 0 && at_spirals != 0;
}

ClaimOutcome two_repelling_cycles(const PlanarPolySystem& sys, const Rational& c) {
  std::string ev = "dC/dt = 2(A²+B²)C exact: ";
  const bool ident = conserved_identity_holds(sys, c);
  ev += ident ? "yes; " : "no; ";
  bool ok = ident && equilibria_off_curve(c, ev);
  const double y = oval_y(c, 1.0);
  const double ys = 1.0 / std::sqrt(2.0);
  ok = repelling_oval(sys, c, y, {0.0, ys}, ev) && ok;
  ok = repelling_oval(sys, c, -y, {0.0, -ys}, ev) && ok;
  return ok_if(ok, ClaimStatus::numerically_supported, ev);
}

ClaimOutcome one_repelling_cycle(const PlanarPolySystem& sys, const Rational& c) {
  std::string ev = "dC/dt = 2(A²+B²)C exact: ";
  const bool ident = conserved_identity_holds(sys, c);
  ev += ident ? "yes; " : "no; ";
  bool ok = ident && equilibria_off_curve(c, ev);
  ok = repelling_oval(sys, c, oval_y(c, 1.0), {0.0, 0.0}, ev) && ok;
  return ok_if(ok, ClaimStatus::numerically_supported, ev);
}

ClaimOutcome homoclinic_loops(const PlanarPolySystem& sys, const Rational& c) {
  std::string ev = "dC/dt = 2(A²+B²)C exact: ";
  const bool ident = conserved_identity_holds(sys, c);
  ev += ident ? "yes" : "no";
  const BivariatePoly curve = p5_c(c);
  const bool through_saddle = curve.evaluate(Rational(0), Rational(0)) == 0;
  ev += std::string("; C(0,0) = 0: ") + (through_saddle ? "yes" : "no");
  bool ok = ident && through_saddle;
  const NumericPoly cq(curve);
  for (double y0 : {1.0, -1.0}) {
    if (curve.evaluate(Rational(0), rational_from_double(y0)) != 0) {
      ok = false;
      continue;
    }
    for (double sign : {1.0, -1.0}) {
      const Run r = run(sys, cq, {0.0, y0}, {0.0, 0.0}, sign, 200.0, [](const Run& s) { return s.min_dist < 1e-4; });
      ok = ok && r.min_dist < 1e-4;
      ev += "; from (0, " + fmt("%.0f", y0) + ") " + (sign > 0 ? "forward" : "backward") + ": distance to saddle " +
            fmt("%.1e", r.min_dist) + " at |t| = " + fmt("%.2f", r.t);
    }
  }
  return ok_if(ok, ClaimStatus::numerically_supported, ev);
}

/// c = −1/4: linearization is inconclusive at (0, ±1/√2), C >= 0 nearby with
/// C = 0 only there, and C grows forward along nearby orbits.
ClaimOutcome boundary_spirals(const PlanarPolySystem& sys) {
  const Rational c = make_rational(-1, 4);
  const double ys = 1.0 / std::sqrt(2.0);
  std::string ev;
  bool ok = conserved_identity_holds(sys, c);
  const NumericPoly cq(p5_c(c));
  for (double y : {ys, -ys}) {
    const LinearizationReport l = linearize(sys, {0.0, y});
    ok = ok && l.cls == FixedPointClass::center_or_fine;
    ev += (ev.empty() ? "" : "; ") + std::string("(0, ") + fmt("%.4f", y) + "): " + lin_text(l.cls, l.trace, l.det);
    const Vec2 start{0.0, y + 0.01};
    const Run fwd = run(sys, cq, start, {0.0, y}, 1.0, 40.0, [](const Run&) { return false; });
    const Run bwd = run(sys, cq, start, {0.0, y}, -1.0, 40.0, [](const Run&) { return false; });
    ok = ok && fwd.c_end > fwd.c_start && bwd.c_end < bwd.c_start && fwd.winding > kTwoPi;
    ev += ", C forward " + fmt("%.3e", fwd.c_start) + " -> " + fmt("%.3e", fwd.c_end) + ", backward -> " +
          fmt("%.3e", bwd.c_end) + ", " + fmt("%.1f", fwd.winding / kTwoPi) + " turns";
  }
  return ok_if(ok, ClaimStatus::numerically_supported, ev);
}

std::vector<PaperClaim> build_claims() {
  std::vector<PaperClaim> out;
  auto add = [&](std::string id, ExampleName sys, std::optional<Rational> c, std::string statement, ClaimKind kind,
                 ClaimStatus expected, std::function<ClaimOutcome(const PlanarPolySystem&)> check, bool boundary = false) {
    out.push_back({std::move(id), sys, std::move(c), std::move(statement), kind, expected, boundary, std::move(check)});
  };
  const Rational zero(0);
  const double ya = std::sqrt(35.0) / 2.0;

  add("P3.origin", ExampleName::P3, std::nullopt, "stable spiral at the origin", ClaimKind::fixed_point_class,
      ClaimStatus::holds, [=](const PlanarPolySystem& s) { return exact_class(s, zero, zero, FixedPointClass::stable_spiral); });
  add("P3.r1-cycle", ExampleName::P3, std::nullopt, "repelling limit cycle at r = 1", ClaimKind::invariant_circle,
      ClaimStatus::holds, [](const PlanarPolySystem& s) {
        return limit_cycle_circle(s, 1, make_rational(1, 2), 2, false);
      });
  add("P3.infinity", ExampleName::P3, std::nullopt, "attracting limit cycle at infinity", ClaimKind::equator_verdict,
      ClaimStatus::holds, cycle_at_infinity);

  for (ExampleName e : {ExampleName::P4, ExampleName::R4}) {
    const std::string p = std::string(to_string(e)) + ".";
    add(p + "origin", e, std::nullopt, "unstable spiral at the origin", ClaimKind::fixed_point_class, ClaimStatus::holds,
        [=](const PlanarPolySystem& s) { return exact_class(s, zero, zero, FixedPointClass::unstable_spiral); });
    add(p + "A-B", e, std::nullopt, "A = (1/2, √35/2) unstable node, B = (1/2, −√35/2) saddle",
        ClaimKind::fixed_point_class, ClaimStatus::holds, [=](const PlanarPolySystem& s) {
          return numeric_classes(s, {{{0.5, ya}, FixedPointClass::unstable_node}, {{0.5, -ya}, FixedPointClass::saddle}});
        });
    add(p + "r1-cycle", e, std::nullopt, "attracting limit cycle at r = 1", ClaimKind::invariant_circle, ClaimStatus::holds,
        [](const PlanarPolySystem& s) { return limit_cycle_circle(s, 1, make_rational(1, 2), 2, true); });
    add(p + "heteroclinic", e, std::nullopt, "two heteroclinic orbits from A to B along r = 3",
        ClaimKind::invariant_circle, ClaimStatus::holds, heteroclinic_r3);
    if (e == ExampleName::P4) {
      add(p + "infinity", e, std::nullopt, "attracting limit cycle at infinity", ClaimKind::equator_verdict,
          ClaimStatus::paper_error_corrected, corrected_equator);
    } else {
      add(p + "infinity", e, std::nullopt, "attracting limit cycle at infinity", ClaimKind::equator_verdict,
          ClaimStatus::holds, cycle_at_infinity);
    }
  }

  const std::vector<std::pair<Rational, std::string>> cases = {
      {make_rational(-1), "-1"}, {make_rational(-1, 8), "-1/8"}, {zero, "0"}, {make_rational(1), "1"}};
  const double ys = 1.0 / std::sqrt(2.0);
  for (ExampleName e : {ExampleName::P5, ExampleName::R5}) {
    for (const auto& [c, label] : cases) {
      const std::string p = std::string(to_string(e)) + "[c=" + label + "].";
      add(p + "fixed-points", e, c, "fixed points exactly (0,0), (0, ±1/√2)", ClaimKind::fixed_point_set,
          ClaimStatus::holds, p5_fixed_point_set);
      add(p + "origin", e, c, "saddle at the origin", ClaimKind::fixed_point_class, ClaimStatus::holds,
          [=](const PlanarPolySystem& s) { return exact_class(s, zero, zero, FixedPointClass::saddle); });
      const FixedPointClass sc = spiral_class(c);
      add(p + "spirals", e, c, std::string("two ") + std::string(to_string(sc)) + "s at (0, ±1/√2)",
          ClaimKind::fixed_point_class, ClaimStatus::holds, [=](const PlanarPolySystem& s) {
            return numeric_classes(s, {{{0.0, ys}, sc}, {{0.0, -ys}, sc}});
          });
      if (label == "-1/8") {
        add(p + "cycles", e, c, "two repelling limit cycles, one around each spiral", ClaimKind::numeric_evidence,
            ClaimStatus::numerically_supported, [=](const PlanarPolySystem& s) { return two_repelling_cycles(s, c); });
      } else if (label == "0") {
        add(p + "homoclinic", e, c, "two homoclinic orbits from the saddle, one around each spiral",
            ClaimKind::numeric_evidence, ClaimStatus::numerically_supported,
            [=](const PlanarPolySystem& s) { return homoclinic_loops(s, c); });
      } else if (label == "1") {
        add(p + "cycle", e, c, "one repelling limit cycle around all three fixed points", ClaimKind::numeric_evidence,
            ClaimStatus::numerically_supported, [=](const PlanarPolySystem& s) { return one_repelling_cycle(s, c); });
      }
      if (e == ExampleName::P5) {
        add(p + "infinity", e, c, "attracting limit cycle at infinity", ClaimKind::equator_verdict,
            ClaimStatus::paper_error_corrected, corrected_equator);
      } else {
        add(p + "infinity", e, c, "attracting limit cycle at infinity", ClaimKind::equator_verdict, ClaimStatus::holds,
            cycle_at_infinity);
      }
    }
    const std::string p = std::string(to_string(e)) + "[c=-1/4].";
    add(p + "spirals", e, make_rational(-1, 4), "unstable spirals at (0, ±1/√2) (case c <= -1/4, boundary value)",
        ClaimKind::numeric_evidence, ClaimStatus::numerically_supported, boundary_spirals, true);
  }
  return out;
}

}  // namespace

const std::vector<PaperClaim>& paper_claims() {
  static const std::vector<PaperClaim> claims = build_claims();
  return claims;
}

ClaimResult evaluate_claim(const PaperClaim& claim, const PlanarPolySystem* override) {
  ClaimResult r{claim.id, claim.statement, claim.expected, ClaimStatus::deviates, ""};
  try {
    const ClaimOutcome o = override ? claim.check(*override) : claim.check(get_example(claim.system, claim.c));
    r.actual = o.status;
    r.evidence = o.evidence;
  } catch (const Error& e) {
    r.evidence = std::string("analysis error: ") + e.what();
  }
  return r;
}

Ledger verify_paper(std::optional<std::string_view> only) {
  Ledger ledger;
  for (const PaperClaim& c : paper_claims()) {
    if (only && c.id != *only) continue;
    ledger.results.push_back(evaluate_claim(c));
  }
  if (only && ledger.results.empty()) throw Error("verify-paper: no claim with id '" + std::string(*only) + "'");
  return ledger;
}

}  // namespace poincare
