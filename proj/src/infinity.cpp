#include "poincare/infinity.hpp"

#include <algorithm>
#include <cmath>

#include "poincare/errors.hpp"

namespace poincare {

PolarDecomposition polar_decomposition(const PlanarPolySystem& sys) {
  const BivariatePoly c = BivariatePoly::var_x();
  const BivariatePoly s = BivariatePoly::var_y();
  PolarDecomposition pd;
  pd.m = sys.degree();
  pd.eta.reserve(pd.m + 1);
  pd.xi.reserve(pd.m + 1);
  for (unsigned d = 0; d <= pd.m; ++d) {
    const BivariatePoly& pdp = sys.p_part(d);
    const BivariatePoly& qdp = sys.q_part(d);
    pd.eta.emplace_back(c * pdp + s * qdp);
    pd.xi.emplace_back(c * qdp - s * pdp);
  }
  for (int d = static_cast<int>(pd.m); d >= 0; --d) {
    if (!pd.eta[static_cast<std::size_t>(d)].is_zero()) {
      pd.i_order = d;
      break;
    }
  }
  for (int j = static_cast<int>(pd.m) - 1; j >= -1; --j) {
    if (!pd.xi_at(j).is_zero()) {
      pd.j_order = j;
      break;
    }
  }
  return pd;
}

TrigPoly g_polynomial(const PlanarPolySystem& sys) {
  const unsigned m = sys.degree();
  return TrigPoly(BivariatePoly::var_x() * sys.q_part(m) - BivariatePoly::var_y() * sys.p_part(m));
}

std::string_view to_string(RadialSign::Kind k) {
  switch (k) {
    case RadialSign::Kind::positive: return "positive";
    case RadialSign::Kind::negative: return "negative";
    case RadialSign::Kind::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::all_points_fixed: return "AllPointsFixed";
    case Verdict::cycle_at_infinity: return "CycleAtInfinity";
    case Verdict::isolated_equilibria: return "IsolatedEquilibria";
    case Verdict::purely_radial: return "PurelyRadial";
  }
  return "PurelyRadial";
}

std::string_view to_string(CycleLimit c) {
  switch (c) {
    case CycleLimit::attracting: return "attracting";
    case CycleLimit::repelling: return "repelling";
    case CycleLimit::uncertified: return "uncertified";
  }
  return "uncertified";
}

RadialSign certify_radial_sign(const PolarDecomposition& pd) {
  RadialSign out;
  if (!pd.i_order) return out;
  const int top = *pd.i_order;
  const TrigPoly& lead = pd.eta[static_cast<std::size_t>(top)];
  const MinAbsBound mu = certified_min_abs(lead);
  if (mu.status != MinAbsStatus::certified) return out;
  double lower = 0.0;
  for (int d = 0; d < top; ++d) lower += pd.eta[static_cast<std::size_t>(d)].sup_bound();
  out.radius = std::max(1.0, lower / mu.bound + 1.0);
  out.kind = lead(0.0) > 0 ? RadialSign::Kind::positive : RadialSign::Kind::negative;
  return out;
}

EquatorReport classify_infinity(const PlanarPolySystem& sys) {
  const PolarDecomposition pd = polar_decomposition(sys);
  if (!pd.i_order) throw DegenerateRadial();

  EquatorReport rep;
  rep.m = pd.m;
  rep.i_order = *pd.i_order;
  rep.j_order = pd.j_order;
  rep.k = pd.k();
  rep.g = g_polynomial(sys);
  rep.radial = certify_radial_sign(pd);

  if (!rep.k) {
    rep.verdict = Verdict::purely_radial;
    rep.notes.push_back("dθ/dt is identically zero: every ray is invariant; no equator classification");
    return rep;
  }
  if (*rep.k >= 2) {
    rep.verdict = Verdict::all_points_fixed;
    if (!rep.g.is_zero()) rep.notes.push_back("internal: k >= 2 but G is not identically zero");
    return rep;
  }
  // k <= 1 forces J = m - 1, so ξ_J is G itself.
  const RootScan scan = roots_on_circle(rep.g);
  rep.flow = sign_arcs(rep.g, scan.roots);
  if (scan.roots.empty()) {
    rep.verdict = Verdict::cycle_at_infinity;
    switch (rep.radial.kind) {
      case RadialSign::Kind::positive: rep.limit = CycleLimit::attracting; break;
      case RadialSign::Kind::negative: rep.limit = CycleLimit::repelling; break;
      case RadialSign::Kind::inconclusive: rep.limit = CycleLimit::uncertified; break;
    }
    if (rep.limit == CycleLimit::uncertified) {
      rep.notes.push_back("leading radial coefficient changes sign; limit-cycle status not certified");
    }
    return rep;
  }
  rep.verdict = Verdict::isolated_equilibria;
  rep.roots = scan.roots;
  if (scan.degenerate) rep.notes.push_back("touching (even-multiplicity) equator equilibrium flagged; local structure not classified");
  return rep;
}

Vec2 CompactifiedSystem::operator()(double s, double theta) const {
  auto poly_in_s = [&](const std::vector<TrigPoly>& coeffs) {
    double acc = 0.0;
    for (std::size_t p = coeffs.size(); p-- > 0;) acc = acc * s + coeffs[p](theta);
    return acc;
  };
  return {poly_in_s(ds_dtau), poly_in_s(dtheta_dtau)};
}

CompactifiedSystem compactified_system(const PolarDecomposition& pd) {
  if (!pd.k()) throw Error("compactified_system: k is undefined (dr/dt or dθ/dt identically zero)");
  const int top_i = *pd.i_order;
  const int top_j = *pd.j_order;
  const int k = top_i - top_j;

  CompactifiedSystem cs;
  auto put = [](std::vector<TrigPoly>& into, int power, const TrigPoly& coeff) {
    const auto idx = static_cast<std::size_t>(power);
    if (into.size() <= idx) into.resize(idx + 1);
    into[idx] = into[idx] + coeff;
  };
  if (k >= 2) {
    // Time rescaled by s^(I-1): ds/dτ = −Σ s^(I+1-d) η_d, dθ/dτ = Σ s^(I-1-j) ξ_j.
    cs.case_tag = CompactifiedSystem::Case::k_ge_2;
    for (int d = 0; d <= top_i; ++d) put(cs.ds_dtau, top_i + 1 - d, -pd.eta[static_cast<std::size_t>(d)]);
    for (int j = -1; j <= top_j; ++j) put(cs.dtheta_dtau, top_i - 1 - j, pd.xi_at(j));
  } else {
    // Time rescaled by s^J: ds/dτ = −s^(2-k) Σ s^(I-d) η_d, dθ/dτ = Σ s^(J-j) ξ_j.
    cs.case_tag = CompactifiedSystem::Case::k_le_1;
    for (int d = 0; d <= top_i; ++d) put(cs.ds_dtau, 2 - k + top_i - d, -pd.eta[static_cast<std::size_t>(d)]);
    for (int j = -1; j <= top_j; ++j) put(cs.dtheta_dtau, top_j - j, pd.xi_at(j));
  }
  return cs;
}

}  // namespace poincare
