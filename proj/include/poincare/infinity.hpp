#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "poincare/poly.hpp"
#include "poincare/trig.hpp"

namespace poincare {

/// dr/dt = Σ_{d=0..I} r^d η_d(θ),  dθ/dt = Σ_{j=-1..J} r^j ξ_j(θ), with
///   η_d = cos θ P_d + sin θ Q_d,   ξ_{d-1} = cos θ Q_d − sin θ P_d
/// built from the homogeneous parts P_d, Q_d on the unit circle.
struct PolarDecomposition {
  unsigned m = 0;
  std::vector<TrigPoly> eta;  ///< eta[d] = η_d, d = 0..m
  std::vector<TrigPoly> xi;   ///< xi[j + 1] = ξ_j, j = -1..m-1
  std::optional<int> i_order;  ///< highest d with η_d ≢ 0
  std::optional<int> j_order;  ///< highest j with ξ_j ≢ 0

  const TrigPoly& xi_at(int j) const { return xi.at(static_cast<std::size_t>(j + 1)); }
  std::optional<int> k() const {
    if (!i_order || !j_order) return std::nullopt;
    return *i_order - *j_order;
  }
};

PolarDecomposition polar_decomposition(const PlanarPolySystem& sys);

/// G_{m+1}(θ) = cos θ Q_m(cos θ, sin θ) − sin θ P_m(cos θ, sin θ).
TrigPoly g_polynomial(const PlanarPolySystem& sys);

struct RadialSign {
  enum class Kind { positive, negative, inconclusive };
  Kind kind = Kind::inconclusive;
  double radius = 0.0;  ///< dr/dt has this sign for every r >= radius
};

std::string_view to_string(RadialSign::Kind k);

/// Sign of dr/dt for large r when the leading η_I is nowhere zero, with a
/// certified dominance radius R = max(1, Σ_{d<I} max|η_d| / min|η_I| + 1).
RadialSign certify_radial_sign(const PolarDecomposition& pd);

enum class Verdict {
  all_points_fixed,     ///< k >= 2
  cycle_at_infinity,    ///< k <= 1, G has no zeros
  isolated_equilibria,  ///< k <= 1, G has zeros
  purely_radial         ///< dθ/dt ≡ 0, k undefined
};

enum class CycleLimit { attracting, repelling, uncertified };

std::string_view to_string(Verdict v);
std::string_view to_string(CycleLimit c);

struct EquatorReport {
  unsigned m = 0;
  int i_order = 0;
  std::optional<int> j_order;
  std::optional<int> k;
  Verdict verdict = Verdict::all_points_fixed;
  CycleLimit limit = CycleLimit::uncertified;  ///< meaningful for cycle_at_infinity
  std::vector<ThetaRoot> roots;                ///< equator equilibria (isolated_equilibria)
  std::vector<SignArc> flow;                   ///< sign of G per arc; positive = counter-clockwise
  TrigPoly g;
  RadialSign radial;
  std::vector<std::string> notes;
};

/// Equator classification. Throws DegenerateRadial when dr/dt ≡ 0.
EquatorReport classify_infinity(const PlanarPolySystem& sys);

/// Near-equator system in (s, θ), s = 1/r, each component a polynomial in s
/// with TrigPoly coefficients (index = power of s).
struct CompactifiedSystem {
  enum class Case { k_ge_2, k_le_1 };
  Case case_tag = Case::k_ge_2;
  std::vector<TrigPoly> ds_dtau;
  std::vector<TrigPoly> dtheta_dtau;

  /// (ds/dτ, dθ/dτ) at (s, θ).
  Vec2 operator()(double s, double theta) const;
};

/// Throws poincare::Error when k is undefined.
CompactifiedSystem compactified_system(const PolarDecomposition& pd);

}  // namespace poincare
