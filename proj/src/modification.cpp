#include "poincare/modification.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>

#include "poincare/errors.hpp"

namespace poincare {

std::string_view to_string(Family f) { return f == Family::p4 ? "p4" : "p5"; }

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::certified: return "certified";
    case CheckStatus::falsified: return "falsified";
    case CheckStatus::unverified: return "unverified";
  }
  return "unverified";
}

std::string_view to_string(Overall o) {
  switch (o) {
    case Overall::pass: return "pass";
    case Overall::fail: return "fail";
    case Overall::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::string_view to_string(ReportStatus s) {
  switch (s) {
    case ReportStatus::consistent: return "consistent";
    case ReportStatus::hypotheses_failed: return "hypotheses_failed";
    case ReportStatus::internal_inconsistency: return "internal_inconsistency";
  }
  return "internal_inconsistency";
}

ModificationSpec::ModificationSpec(BivariatePoly w_in, Family fam) : w(std::move(w_in)), family(fam) {
  if (w.is_zero()) throw Error("modification: W must be nonzero");
  n = *w.degree();
  w_leading = homogeneous_part(w, n);
}

namespace {

bool exact_nonpositive(const BivariatePoly& w, Vec2 p) {
  return w.evaluate(rational_from_double(p.x), rational_from_double(p.y)) <= 0;
}

/// Smallest ρ with μ r^N > Σ_{d<N} M_d r^d for every r >= ρ.
double dominance_radius(double mu, const std::vector<double>& lower_sups, unsigned n) {
  auto f = [&](double r) {
    double lower = 0.0;
    for (std::size_t d = 0; d < lower_sups.size(); ++d) lower += lower_sups[d] * std::pow(r, static_cast<double>(d));
    return mu * std::pow(r, static_cast<double>(n)) - lower;
  };
  if (std::all_of(lower_sups.begin(), lower_sups.end(), [](double m) { return m == 0.0; })) return 0.0;
  double hi = 1.0;
  while (!(f(hi) > 0.0)) hi *= 2.0;
  double lo = 0.0;
  for (int i = 0; i < 200 && hi - lo > 1e-12 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) > 0.0 ? hi : lo) = mid;
  }
  return hi;
}

/// Upper bound on |∇W| over the square |x - cx| <= h, |y - cy| <= h.
double gradient_bound(const std::vector<std::array<double, 3>>& terms, double cx, double cy, double h) {
  const double X = std::fabs(cx) + h;
  const double Y = std::fabs(cy) + h;
  double gx = 0.0, gy = 0.0;
  for (const auto& [c, i, j] : terms) {
    if (i > 0) gx += std::fabs(c) * i * std::pow(X, i - 1) * std::pow(Y, j);
    if (j > 0) gy += std::fabs(c) * j * std::pow(X, i) * std::pow(Y, j - 1);
  }
  return std::hypot(gx, gy);
}

struct QuadOutcome {
  CheckStatus status = CheckStatus::unverified;
  std::optional<Vec2> witness;
};

/// W > 0 on the square [-half, half]² by subdivision with per-cell gradient bounds.
QuadOutcome certify_square(const BivariatePoly& w, double half, const PositivityOptions& opts) {
  const NumericPoly wn(w);
  std::vector<std::array<double, 3>> terms;
  for (const auto& [m, c] : w.terms()) terms.push_back({c.get_d(), static_cast<double>(m.x), static_cast<double>(m.y)});

  struct Cell {
    double cx, cy, h;
    unsigned depth;
  };
  // Breadth first, so a coarse negative sample is found before any branch
  // exhausts the depth budget.
  std::deque<Cell> queue{{0.0, 0.0, half, 0}};
  std::size_t visited = 0;
  bool exhausted = false;
  QuadOutcome out;
  while (!queue.empty()) {
    if (++visited > opts.max_cells) return out;
    const Cell cell = queue.front();
    queue.pop_front();
    const double v = wn(cell.cx, cell.cy);
    const double slack = 1e-12 * wn.abs_sum(cell.cx, cell.cy);
    if (v <= slack && exact_nonpositive(w, {cell.cx, cell.cy})) {
      out.status = CheckStatus::falsified;
      out.witness = Vec2{cell.cx, cell.cy};
      return out;
    }
    const double drop = gradient_bound(terms, cell.cx, cell.cy, cell.h) * std::numbers::sqrt2 * cell.h;
    if (v - drop - slack > 0.0) continue;
    if (cell.depth >= opts.max_depth) {
      exhausted = true;
      continue;
    }
    const double q = 0.5 * cell.h;
    for (double sx : {-q, q}) {
      for (double sy : {-q, q}) queue.push_back({cell.cx + sx, cell.cy + sy, q, cell.depth + 1});
    }
  }
  if (exhausted) return out;
  out.status = CheckStatus::certified;
  return out;
}

/// Looks for an exact point with W <= 0 along rays and on a coarse grid.
std::optional<Vec2> search_nonpositive(const BivariatePoly& w, std::optional<double> lead_theta) {
  std::vector<double> angles;
  if (lead_theta) angles.push_back(*lead_theta);
  for (int i = 0; i < 64; ++i) angles.push_back(2.0 * std::numbers::pi * i / 64.0);
  const NumericPoly wn(w);
  for (double th : angles) {
    for (double r = 0.0; r <= 1e6; r = r == 0.0 ? 1.0 / 64 : 2.0 * r) {
      const Vec2 p{r * std::cos(th), r * std::sin(th)};
      if (wn(p.x, p.y) <= 0.0 && exact_nonpositive(w, p)) return p;
    }
  }
  for (int i = -40; i <= 40; ++i) {
    for (int j = -40; j <= 40; ++j) {
      const Vec2 p{0.25 * i, 0.25 * j};
      if (wn(p.x, p.y) <= 0.0 && exact_nonpositive(w, p)) return p;
    }
  }
  return std::nullopt;
}

}  // namespace

HypothesisReport check_modification(const ModificationSpec& spec, const PositivityOptions& opts) {
  HypothesisReport rep;
  rep.degree_ok = spec.n >= (spec.family == Family::p4 ? 2u : 4u);

  // W_N(cos θ, sin θ): W_N is positive definite iff this is positive everywhere.
  const TrigPoly lead(spec.w_leading);
  const MinAbsBound mu = certified_min_abs(lead);
  switch (mu.status) {
    case MinAbsStatus::certified:
      if (lead(0.0) > 0.0) {
        rep.leading_positive_definite = CheckStatus::certified;
      } else {
        rep.leading_positive_definite = CheckStatus::falsified;
        rep.leading_witness_theta = 0.0;
      }
      break;
    case MinAbsStatus::has_root:
      rep.leading_positive_definite = CheckStatus::falsified;
      rep.leading_witness_theta = mu.witness_theta;
      break;
    case MinAbsStatus::inconclusive: break;
  }

  if (rep.leading_positive_definite == CheckStatus::certified) {
    std::vector<double> sups;
    for (unsigned d = 0; d < spec.n; ++d) sups.push_back(TrigPoly(homogeneous_part(spec.w, d)).sup_bound());
    rep.dominance_radius = dominance_radius(mu.bound, sups, spec.n);
    const QuadOutcome q = certify_square(spec.w, std::max(1.0, rep.dominance_radius), opts);
    rep.positivity = q.status;
    rep.positivity_witness = q.witness;
  } else if (auto p = search_nonpositive(spec.w, rep.leading_witness_theta)) {
    rep.positivity = CheckStatus::falsified;
    rep.positivity_witness = p;
  }

  const bool any_false = !rep.degree_ok || rep.positivity == CheckStatus::falsified ||
                         rep.leading_positive_definite == CheckStatus::falsified;
  const bool all_true = rep.degree_ok && rep.positivity == CheckStatus::certified &&
                        rep.leading_positive_definite == CheckStatus::certified;
  rep.overall = all_true ? Overall::pass : any_false ? Overall::fail : Overall::inconclusive;
  return rep;
}

BivariatePoly p5_a() { return parse_poly("x*(2*x^2+2*y^2+1)"); }
BivariatePoly p5_b() { return parse_poly("y*(2*x^2+2*y^2-1)"); }
BivariatePoly p5_c(const Rational& c) { return parse_poly("(x^2+y^2)^2+x^2-y^2") - BivariatePoly(c); }

PlanarPolySystem build_modified_system(const ModificationSpec& spec, const std::optional<Rational>& c) {
  const BivariatePoly x = BivariatePoly::var_x(), y = BivariatePoly::var_y();
  if (spec.family == Family::p4) {
    const BivariatePoly radial = parse_poly("(x^2+y^2-1)*(x^2+y^2-9)");
    const BivariatePoly c3w = parse_poly("x^2+y^2-2*x-8") * spec.w;
    return {x * radial - y * c3w, y * radial + x * c3w};
  }
  if (!c) throw MissingParameter("the P5 family requires the parameter c");
  const BivariatePoly a = p5_a(), b = p5_b(), cc = p5_c(*c);
  return {a * cc - b * spec.w, b * cc + a * spec.w};
}

BivariatePoly conserved_quantity_residual(const PlanarPolySystem& sys, const BivariatePoly& cq,
                                          const BivariatePoly& factor) {
  return partial_derivative(cq, Var::x) * sys.p() + partial_derivative(cq, Var::y) * sys.q() - factor * cq;
}

std::size_t FullReport::failures() const {
  return static_cast<std::size_t>(std::count_if(assertions.begin(), assertions.end(),
                                                [](const Assertion& a) { return !a.passed; }));
}

namespace {

std::string fmt_point(Vec2 p) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "(%.10g, %.10g)", p.x, p.y);
  return buf;
}

void expect_points(std::vector<Assertion>& out, const FixedPointSet& found, const std::vector<Vec2>& expected) {
  Assertion a{"fixed point set", found.points.size() == expected.size(), ""};
  for (const Vec2& e : expected) {
    const bool hit = std::any_of(found.points.begin(), found.points.end(), [&](const FixedPoint& f) {
      return std::hypot(f.point.x - e.x, f.point.y - e.y) < 1e-8;
    });
    a.passed = a.passed && hit;
  }
  a.detail = std::to_string(found.points.size()) + " found, " + std::to_string(expected.size()) + " expected";
  out.push_back(a);
}

LinearizationReport expect_class(std::vector<Assertion>& out, const PlanarPolySystem& sys, const std::string& label,
                                 Vec2 p, FixedPointClass want) {
  const LinearizationReport lr = linearize(sys, p);
  out.push_back({label + " is " + std::string(to_string(want)), lr.cls == want,
                 fmt_point(p) + ": " + std::string(to_string(lr.cls))});
  return lr;
}

/// Sign of t everywhere on the circle (0 when it vanishes or is uncertified).
int certified_sign(const TrigPoly& t) {
  if (t.is_zero()) return 0;
  const MinAbsBound b = certified_min_abs(t);
  if (b.status != MinAbsStatus::certified) return 0;
  return t(0.0) > 0.0 ? 1 : -1;
}

bool contains_angle(const SignArc& arc, double theta) {
  for (double t : {theta, theta + 2.0 * std::numbers::pi}) {
    if (t >= arc.from && t <= arc.to) return true;
  }
  return false;
}

void p4_assertions(std::vector<Assertion>& out, std::vector<LinearizationReport>& lin, const PlanarPolySystem& sys) {
  const double ya = std::sqrt(35.0) / 2.0;
  const Vec2 o{0.0, 0.0}, pa{0.5, ya}, pb{0.5, -ya};
  expect_points(out, find_fixed_points(sys, Box::square(5.0), 64), {o, pa, pb});
  lin.push_back(expect_class(out, sys, "O", o, FixedPointClass::unstable_spiral));
  lin.push_back(expect_class(out, sys, "A", pa, FixedPointClass::unstable_node));
  lin.push_back(expect_class(out, sys, "B", pb, FixedPointClass::saddle));

  const bool inv1 = invariant_circle_check(sys, 1).invariant;
  out.push_back({"r=1 invariant", inv1, ""});
  if (inv1) {
    const auto arcs = arc_flow_signs(sys, 1);
    out.push_back({"r=1 dθ/dt < 0", arcs.size() == 1 && arcs[0].sign < 0, std::to_string(arcs.size()) + " arc(s)"});
  }
  // Attracting: dr/dt > 0 just inside, < 0 just outside.
  const int inside = certified_sign(radial_on_circle(sys, make_rational(1, 2)));
  const int outside = certified_sign(radial_on_circle(sys, 2));
  out.push_back({"r=1 attracting", inside > 0 && outside < 0,
                 "sign dr/dt at r=1/2: " + std::to_string(inside) + ", at r=2: " + std::to_string(outside)});

  const bool inv3 = invariant_circle_check(sys, 3).invariant;
  out.push_back({"r=3 invariant", inv3, ""});
  if (inv3) {
    const auto arcs = arc_flow_signs(sys, 3);
    const double ta = std::atan2(ya, 0.5), tb = 2.0 * std::numbers::pi - ta;
    bool ok = arcs.size() == 2;
    for (const auto& arc : arcs) {
      const bool left = contains_angle(arc, std::numbers::pi);
      const bool right = contains_angle(arc, 0.0);
      ok = ok && (left != right) && ((left && arc.sign > 0) || (right && arc.sign < 0));
    }
    if (arcs.size() == 2) {
      const double b0 = std::fmod(arcs[0].from, 2.0 * std::numbers::pi);
      const double b1 = std::fmod(arcs[1].from, 2.0 * std::numbers::pi);
      const auto near = [](double u, double v) { return std::fabs(u - v) < 1e-9; };
      ok = ok && ((near(b0, ta) && near(b1, tb)) || (near(b0, tb) && near(b1, ta)));
    }
    out.push_back({"r=3 heteroclinic arcs A→B", ok, std::to_string(arcs.size()) + " arc(s)"});
  }
}

FixedPointClass p5_spiral_class(const Rational& c) {
  const Rational quarter = make_rational(-1, 4);
  if (c < quarter) return FixedPointClass::unstable_spiral;
  if (c > quarter) return FixedPointClass::stable_spiral;
  return FixedPointClass::center_or_fine;
}

void p5_assertions(std::vector<Assertion>& out, std::vector<LinearizationReport>& lin, const PlanarPolySystem& sys,
                   const Rational& c) {
  const double ys = 1.0 / std::sqrt(2.0);
  const Vec2 o{0.0, 0.0}, up{0.0, ys}, down{0.0, -ys};
  expect_points(out, find_fixed_points(sys, Box::square(3.0), 64), {o, up, down});
  lin.push_back(expect_class(out, sys, "origin", o, FixedPointClass::saddle));
  lin.push_back(expect_class(out, sys, "(0, 1/√2)", up, p5_spiral_class(c)));
  lin.push_back(expect_class(out, sys, "(0, -1/√2)", down, p5_spiral_class(c)));

  const BivariatePoly a = p5_a(), b = p5_b();
  const BivariatePoly factor = BivariatePoly(2) * (a * a + b * b);
  const BivariatePoly residual = conserved_quantity_residual(sys, p5_c(c), factor);
  out.push_back({"dC/dt = 2(A²+B²)C", residual.is_zero(), residual.is_zero() ? "residual 0" : residual.to_string()});
}

}  // namespace

FullReport full_report(const ModificationSpec& spec, const std::optional<Rational>& c) {
  const HypothesisReport hyp = check_modification(spec);
  PlanarPolySystem sys = build_modified_system(spec, c);

  std::vector<Assertion> asserts;
  std::vector<LinearizationReport> lin;
  std::vector<std::string> notes;
  if (spec.family == Family::p4) {
    p4_assertions(asserts, lin, sys);
  } else {
    p5_assertions(asserts, lin, sys, *c);
  }

  const EquatorReport eq = classify_infinity(sys);
  asserts.push_back({"equator is a cycle", eq.verdict == Verdict::cycle_at_infinity, std::string(to_string(eq.verdict))});
  if (spec.family == Family::p4) {
    asserts.push_back({"cycle at infinity attracting", eq.verdict == Verdict::cycle_at_infinity && eq.limit == CycleLimit::attracting,
                       std::string(to_string(eq.limit))});
  } else {
    notes.push_back("limit cycle at infinity for the P5 family rests on the dC/dt sign argument; numerically supported");
  }

  FullReport rep{hyp, c, std::move(sys), eq, std::move(lin), std::move(asserts), ReportStatus::consistent, std::move(notes)};
  if (hyp.overall != Overall::pass) {
    rep.status = ReportStatus::hypotheses_failed;
  } else if (rep.failures() > 0) {
    rep.status = ReportStatus::internal_inconsistency;
  }
  return rep;
}

}  // namespace poincare
