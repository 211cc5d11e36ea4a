#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "poincare/infinity.hpp"
#include "poincare/ledger.hpp"
#include "poincare/local.hpp"
#include "poincare/modification.hpp"

namespace poincare {

using Json = nlohmann::ordered_json;

/// "a_0 + a_1 cos θ + b_1 sin θ + ...", exact coefficients; "0" when zero.
std::string fourier_to_string(const TrigPoly& t);

/// {"a": [...], "b": [...]} with exact rational strings.
Json fourier_json(const TrigPoly& t);

/// {"m", "I", "J", "k", "verdict", "limit", "G_fourier", "equator_roots",
///  "radial_sign", "notes"}.
Json to_json(const EquatorReport& r);

struct InvariantCircle {
  Rational r;
  std::vector<FlowArc> arcs;
};

/// Local analysis as printed by the CLI: fixed points with linearization,
/// plus invariant circles found by scan_invariant_circles.
struct LocalSummary {
  FixedPointSet set;
  std::vector<LinearizationReport> linearizations;
  std::vector<InvariantCircle> circles;
};

/// Searches `box` with a grid_n² Newton grid and scans rational radii plus the
/// (rational) radii of the fixed points found.
LocalSummary local_summary(const PlanarPolySystem& sys, const Box& box, int grid_n);

Json fixed_points_json(const LocalSummary& s);
Json invariant_circles_json(const LocalSummary& s);

Json to_json(const HypothesisReport& h);
Json to_json(const FullReport& r);
Json to_json(const Ledger& l);

std::string format_text(const EquatorReport& r);
std::string format_text(const LocalSummary& s);
std::string format_text(const PolarDecomposition& pd);
std::string format_text(const HypothesisReport& h);
std::string format_text(const FullReport& r);
std::string format_text(const Ledger& l);

}  // namespace poincare
