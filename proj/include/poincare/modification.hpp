#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "poincare/infinity.hpp"
#include "poincare/local.hpp"
#include "poincare/poly.hpp"

namespace poincare {

enum class Family { p4, p5 };

std::string_view to_string(Family f);

/// Candidate modification polynomial W for one of the two families.
struct ModificationSpec {
  BivariatePoly w;
  unsigned n = 0;          ///< deg W
  BivariatePoly w_leading;  ///< homogeneous part of degree n
  Family family = Family::p4;

  /// Throws poincare::Error if w is zero.
  ModificationSpec(BivariatePoly w, Family family);
};

enum class CheckStatus { certified, falsified, unverified };
enum class Overall { pass, fail, inconclusive };

std::string_view to_string(CheckStatus s);
std::string_view to_string(Overall o);

struct HypothesisReport {
  CheckStatus positivity = CheckStatus::unverified;
  std::optional<Vec2> positivity_witness;  ///< W <= 0 here (exact check)
  double dominance_radius = 0.0;           ///< W > 0 for r >= this, when certified
  bool degree_ok = false;
  CheckStatus leading_positive_definite = CheckStatus::unverified;
  std::optional<double> leading_witness_theta;  ///< W_N(cos, sin) <= 0 here
  Overall overall = Overall::inconclusive;
};

struct PositivityOptions {
  std::size_t max_cells = 4'000'000;
  unsigned max_depth = 24;
};

/// Checks the three hypotheses of the classification theorem for spec.family.
HypothesisReport check_modification(const ModificationSpec& spec, const PositivityOptions& opts = {});

/// A(x, y) = x (2x²+2y²+1), B(x, y) = y (2x²+2y²−1), C(x, y) = (x²+y²)²+x²−y²−c.
BivariatePoly p5_a();
BivariatePoly p5_b();
BivariatePoly p5_c(const Rational& c);

/// P4 family: x C1 C2 − y C3 W, y C1 C2 + x C3 W.
/// P5 family: A C − B W, B C + A W.
/// Throws MissingParameter when family = p5 and c is absent.
PlanarPolySystem build_modified_system(const ModificationSpec& spec, const std::optional<Rational>& c);

/// ∂cq/∂x P + ∂cq/∂y Q − factor cq, exactly. Zero certifies dcq/dt = factor cq.
BivariatePoly conserved_quantity_residual(const PlanarPolySystem& sys, const BivariatePoly& cq,
                                          const BivariatePoly& factor);

struct Assertion {
  std::string name;
  bool passed = false;
  std::string detail;
};

enum class ReportStatus { consistent, hypotheses_failed, internal_inconsistency };

std::string_view to_string(ReportStatus s);

struct FullReport {
  HypothesisReport hypotheses;
  std::optional<Rational> c;
  PlanarPolySystem system;
  EquatorReport infinity;
  std::vector<LinearizationReport> fixed_points;
  std::vector<Assertion> assertions;
  ReportStatus status = ReportStatus::consistent;
  std::vector<std::string> notes;

  std::size_t failures() const;
};

/// Hypothesis check followed by the chained analysis and the family's
/// assertion list. Throws MissingParameter like build_modified_system.
FullReport full_report(const ModificationSpec& spec, const std::optional<Rational>& c);

}  // namespace poincare
