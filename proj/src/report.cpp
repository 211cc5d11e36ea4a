#include "poincare/report.hpp"

#include <cmath>
#include <cstdio>
#include <set>

#include "poincare/errors.hpp"

namespace poincare {

namespace {

// JSON and text must not distinguish -0 from 0.
double clean(double v) { return v == 0.0 ? 0.0 : v; }

std::string num(double v, const char* pattern = "%.12g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, clean(v));
  return buf;
}

std::string sign_word(int s) { return s > 0 ? "positive" : s < 0 ? "negative" : "zero"; }

Json arcs_json(const std::vector<SignArc>& arcs) {
  Json a = Json::array();
  for (const auto& arc : arcs) a.push_back({{"from", clean(arc.from)}, {"to", clean(arc.to)}, {"sign", arc.sign}});
  return a;
}

int arc_sign_from(const std::vector<SignArc>& arcs, double theta) {
  for (const auto& a : arcs) {
    if (std::fabs(a.from - theta) < 1e-12) return a.sign;
  }
  return 0;
}

}  // namespace

std::string fourier_to_string(const TrigPoly& t) {
  if (t.is_zero()) return "0";
  std::string out;
  auto term = [&](const Rational& c, const std::string& basis) {
    if (c == 0) return;
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (out.empty()) {
      out += neg ? "-" : "";
    } else {
      out += neg ? " - " : " + ";
    }
    if (basis.empty()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += basis;
    }
  };
  const auto& a = t.cos_coeffs();
  const auto& b = t.sin_coeffs();
  term(a[0], "");
  for (std::size_t k = 1; k < a.size(); ++k) {
    const std::string angle = k == 1 ? "θ" : std::to_string(k) + "θ";
    term(a[k], "cos " + angle);
    term(b[k], "sin " + angle);
  }
  return out;
}

Json fourier_json(const TrigPoly& t) {
  Json a = Json::array(), b = Json::array();
  for (const auto& c : t.cos_coeffs()) a.push_back(c.get_str());
  for (const auto& c : t.sin_coeffs()) b.push_back(c.get_str());
  return {{"a", a}, {"b", b}};
}

Json to_json(const EquatorReport& r) {
  Json j;
  j["m"] = r.m;
  j["I"] = r.i_order;
  j["J"] = r.j_order ? Json(*r.j_order) : Json(nullptr);
  j["k"] = r.k ? Json(*r.k) : Json(nullptr);
  j["verdict"] = std::string(to_string(r.verdict));
  j["limit"] = r.verdict == Verdict::cycle_at_infinity ? Json(std::string(to_string(r.limit))) : Json(nullptr);
  j["G_fourier"] = fourier_json(r.g);
  Json roots = Json::array();
  for (const auto& root : r.roots) {
    roots.push_back({{"theta", clean(root.theta)},
                     {"bracket", {clean(root.lo), clean(root.hi)}},
                     {"flow_sign", arc_sign_from(r.flow, root.theta)},
                     {"multiplicity", root.multiplicity_hint == RootKind::simple ? "simple" : "degenerate"}});
  }
  j["equator_roots"] = roots;
  const char* sign = r.radial.kind == RadialSign::Kind::positive   ? "positive"
                     : r.radial.kind == RadialSign::Kind::negative ? "negative"
                                                                   : "inconclusive";
  j["radial_sign"] = {{"sign", sign},
                      {"R", r.radial.kind == RadialSign::Kind::inconclusive ? Json(nullptr) : Json(clean(r.radial.radius))}};
  j["notes"] = r.notes;
  return j;
}

LocalSummary local_summary(const PlanarPolySystem& sys, const Box& box, int grid_n) {
  LocalSummary s;
  s.set = find_fixed_points(sys, box, grid_n);
  std::vector<Rational> extra;
  for (const auto& fp : s.set.points) {
    try {
      s.linearizations.push_back(linearize(sys, fp.point));
    } catch (const NotAFixedPoint&) {
      LinearizationReport lr;
      lr.point = fp.point;
      s.linearizations.push_back(lr);
    }
    const double r = std::hypot(fp.point.x, fp.point.y);
    if (r > 0.0) {
      const Rational q = best_rational(r, 1000);
      if (std::fabs(q.get_d() - r) < 1e-9) extra.push_back(q);
    }
  }
  for (const auto& r : scan_invariant_circles(sys, extra)) s.circles.push_back({r, arc_flow_signs(sys, r)});
  return s;
}

Json fixed_points_json(const LocalSummary& s) {
  Json a = Json::array();
  for (std::size_t i = 0; i < s.set.points.size(); ++i) {
    const auto& fp = s.set.points[i];
    const auto& lr = s.linearizations[i];
    a.push_back({{"x", clean(fp.point.x)},
                 {"y", clean(fp.point.y)},
                 {"trace", clean(lr.trace)},
                 {"det", clean(lr.det)},
                 {"discriminant", clean(lr.discriminant)},
                 {"class", std::string(to_string(lr.cls))},
                 {"residual", clean(fp.residual)}});
  }
  return a;
}

Json invariant_circles_json(const LocalSummary& s) {
  Json a = Json::array();
  for (const auto& c : s.circles) a.push_back({{"r", c.r.get_str()}, {"arcs", arcs_json(c.arcs)}});
  return a;
}

Json to_json(const HypothesisReport& h) {
  Json j;
  j["degree_ok"] = h.degree_ok;
  j["positivity"] = std::string(to_string(h.positivity));
  j["positivity_witness"] = h.positivity_witness ? Json{clean(h.positivity_witness->x), clean(h.positivity_witness->y)} : Json(nullptr);
  j["dominance_radius"] = h.positivity == CheckStatus::certified ? Json(clean(h.dominance_radius)) : Json(nullptr);
  j["leading_positive_definite"] = std::string(to_string(h.leading_positive_definite));
  j["leading_witness_theta"] = h.leading_witness_theta ? Json(clean(*h.leading_witness_theta)) : Json(nullptr);
  j["overall"] = std::string(to_string(h.overall));
  return j;
}

Json to_json(const FullReport& r) {
  Json j;
  j["hypotheses"] = to_json(r.hypotheses);
  j["c"] = r.c ? Json(r.c->get_str()) : Json(nullptr);
  j["system"] = {{"p", r.system.p().to_string()}, {"q", r.system.q().to_string()}};
  j["infinity"] = to_json(r.infinity);
  Json fps = Json::array();
  for (const auto& l : r.fixed_points) {
    fps.push_back({{"x", clean(l.point.x)},
                   {"y", clean(l.point.y)},
                   {"trace", clean(l.trace)},
                   {"det", clean(l.det)},
                   {"discriminant", clean(l.discriminant)},
                   {"class", std::string(to_string(l.cls))}});
  }
  j["fixed_points"] = fps;
  Json as = Json::array();
  for (const auto& a : r.assertions) as.push_back({{"name", a.name}, {"passed", a.passed}, {"detail", a.detail}});
  j["assertions"] = as;
  j["status"] = std::string(to_string(r.status));
  j["notes"] = r.notes;
  return j;
}

Json to_json(const Ledger& l) {
  Json claims = Json::array();
  for (const auto& r : l.results) {
    claims.push_back({{"id", r.id},
                      {"statement", r.statement},
                      {"expected", std::string(to_string(r.expected))},
                      {"actual", std::string(to_string(r.actual))},
                      {"matches", r.matches()},
                      {"evidence", r.evidence}});
  }
  return {{"claims", claims}, {"all_match", l.all_match()}};
}

std::string format_text(const EquatorReport& r) {
  std::string out;
  out += "degree m: " + std::to_string(r.m) + "\n";
  out += "I = " + std::to_string(r.i_order) + ", J = " + (r.j_order ? std::to_string(*r.j_order) : "undefined") +
         ", k = " + (r.k ? std::to_string(*r.k) : "undefined") + "\n";
  out += "G(θ) = " + fourier_to_string(r.g) + "\n";
  out += "verdict: " + std::string(to_string(r.verdict));
  if (r.verdict == Verdict::cycle_at_infinity) out += " " + std::string(to_string(r.limit));
  out += "\n";
  if (r.radial.kind != RadialSign::Kind::inconclusive) {
    out += "dr/dt " + std::string(to_string(r.radial.kind)) + " for r >= " + num(r.radial.radius, "%.6g") + "\n";
  } else {
    out += "dr/dt sign for large r: inconclusive\n";
  }
  for (const auto& root : r.roots) {
    out += "  equator equilibrium θ = " + num(root.theta, "%.12f") + " [" + num(root.lo, "%.12f") + ", " +
           num(root.hi, "%.12f") + "]" + (root.multiplicity_hint == RootKind::degenerate ? " (degenerate)" : "") +
           ", flow after: " + sign_word(arc_sign_from(r.flow, root.theta)) + "\n";
  }
  for (const auto& n : r.notes) out += "note: " + n + "\n";
  return out;
}

std::string format_text(const LocalSummary& s) {
  std::string out = "fixed points (" + std::to_string(s.set.points.size()) + "):\n";
  for (std::size_t i = 0; i < s.set.points.size(); ++i) {
    const auto& l = s.linearizations[i];
    out += "  (" + num(s.set.points[i].point.x) + ", " + num(s.set.points[i].point.y) + ")  " +
           std::string(to_string(l.cls)) + "  trace " + num(l.trace, "%.10g") + "  det " + num(l.det, "%.10g") + "\n";
  }
  out += "invariant circles (" + std::to_string(s.circles.size()) + "):\n";
  for (const auto& c : s.circles) {
    out += "  r = " + c.r.get_str() + ":";
    for (const auto& a : c.arcs) {
      out += " [" + num(a.from, "%.6f") + ", " + num(a.to, "%.6f") + "] " + sign_word(a.sign);
    }
    out += "\n";
  }
  return out;
}

std::string format_text(const PolarDecomposition& pd) {
  std::string out = "dr/dt = Σ r^d η_d(θ):\n";
  for (std::size_t d = 0; d < pd.eta.size(); ++d) {
    if (!pd.eta[d].is_zero()) out += "  η_" + std::to_string(d) + " = " + fourier_to_string(pd.eta[d]) + "\n";
  }
  out += "dθ/dt = Σ r^j ξ_j(θ):\n";
  for (std::size_t i = 0; i < pd.xi.size(); ++i) {
    if (!pd.xi[i].is_zero()) {
      out += "  ξ_" + std::to_string(static_cast<int>(i) - 1) + " = " + fourier_to_string(pd.xi[i]) + "\n";
    }
  }
  return out;
}

std::string format_text(const HypothesisReport& h) {
  std::string out;
  out += "degree condition: " + std::string(h.degree_ok ? "ok" : "fails") + "\n";
  out += "W > 0 everywhere: " + std::string(to_string(h.positivity));
  if (h.positivity_witness) out += " (W <= 0 at (" + num(h.positivity_witness->x) + ", " + num(h.positivity_witness->y) + "))";
  if (h.positivity == CheckStatus::certified) out += " (dominance radius " + num(h.dominance_radius, "%.6g") + ")";
  out += "\n";
  out += "W_N positive definite: " + std::string(to_string(h.leading_positive_definite));
  if (h.leading_witness_theta) out += " (fails at θ = " + num(*h.leading_witness_theta, "%.9f") + ")";
  out += "\n";
  out += "hypotheses: " + std::string(to_string(h.overall)) + "\n";
  return out;
}

std::string format_text(const FullReport& r) {
  std::string out = format_text(r.hypotheses);
  out += "dx/dt = " + r.system.p().to_string() + "\n";
  out += "dy/dt = " + r.system.q().to_string() + "\n";
  out += format_text(r.infinity);
  for (const auto& a : r.assertions) {
    out += std::string(a.passed ? "  [pass] " : "  [FAIL] ") + a.name + (a.detail.empty() ? "" : ": " + a.detail) + "\n";
  }
  for (const auto& n : r.notes) out += "note: " + n + "\n";
  out += "status: " + std::string(to_string(r.status)) + "\n";
  return out;
}

std::string format_text(const Ledger& l) {
  std::string out;
  std::size_t ok = 0;
  for (const auto& r : l.results) {
    if (r.matches()) ++ok;
    out += (r.matches() ? "ok   " : "FAIL ") + r.id + "  " + std::string(to_string(r.actual)) +
           (r.matches() ? "" : " (expected " + std::string(to_string(r.expected)) + ")") + "\n";
    out += "     " + r.statement + "\n";
    out += "     " + r.evidence + "\n";
  }
  out += std::to_string(ok) + "/" + std::to_string(l.results.size()) + " claims at expected status\n";
  return out;
}

}  // namespace poincare
