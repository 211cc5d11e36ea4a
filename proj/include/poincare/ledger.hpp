#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "poincare/catalog.hpp"
#include "poincare/poly.hpp"

namespace poincare {

enum class ClaimStatus { holds, paper_error_corrected, numerically_supported, deviates };

std::string_view to_string(ClaimStatus s);

enum class ClaimKind { equator_verdict, fixed_point_class, fixed_point_set, invariant_circle, conserved_identity, numeric_evidence };

std::string_view to_string(ClaimKind k);

struct ClaimOutcome {
  ClaimStatus status = ClaimStatus::deviates;
  std::string evidence;
};

/// One stated feature of an example. `check` runs against a system,
/// normally get_example(system, c).
struct PaperClaim {
  std::string id;
  ExampleName system = ExampleName::P3;
  std::optional<Rational> c;
  std::string statement;
  ClaimKind kind = ClaimKind::equator_verdict;
  ClaimStatus expected = ClaimStatus::holds;
  bool boundary = false;  ///< extra probe at c = -1/4, outside the four case lists
  std::function<ClaimOutcome(const PlanarPolySystem&)> check;
};

struct ClaimResult {
  std::string id;
  std::string statement;
  ClaimStatus expected = ClaimStatus::holds;
  ClaimStatus actual = ClaimStatus::deviates;
  std::string evidence;

  bool matches() const { return expected == actual; }
};

/// Every claim, in a fixed order.
const std::vector<PaperClaim>& paper_claims();

/// Runs one claim, against `override` instead of the built-in system when given.
ClaimResult evaluate_claim(const PaperClaim& claim, const PlanarPolySystem* override = nullptr);

struct Ledger {
  std::vector<ClaimResult> results;

  bool all_match() const;
  /// 0 when every claim is at its expected status, 3 otherwise.
  int exit_code() const { return all_match() ? 0 : 3; }
};

/// Evaluates all claims, or only the one with id `only`. Throws
/// poincare::Error when `only` names no claim.
Ledger verify_paper(std::optional<std::string_view> only = std::nullopt);

}  // namespace poincare
