#pragma once

#include <cstddef>
#include <vector>

#include "poincare/poly.hpp"

namespace poincare {

/// A polynomial in (cos θ, sin θ). The source is a BivariatePoly in formal
/// variables (c, s) stored in the x, y slots. The Fourier list
///   a_0 + Σ_k a_k cos kθ + b_k sin kθ
/// is exact and canonical: two TrigPolys agree as functions of θ iff their
/// coefficient lists are identical.
class TrigPoly {
 public:
  TrigPoly() = default;
  explicit TrigPoly(BivariatePoly source);

  /// Builds a TrigPoly from Fourier coefficients (cos_coeffs[0] = a_0,
  /// sin_coeffs[0] ignored). The source is synthesized with Chebyshev
  /// polynomials: cos kθ = T_k(c), sin kθ = s U_{k-1}(c).
  static TrigPoly from_fourier(std::vector<Rational> cos_coeffs, std::vector<Rational> sin_coeffs);

  const BivariatePoly& source() const { return source_; }
  /// a_0..a_K and b_0..b_K (b_0 always 0); empty when identically zero.
  const std::vector<Rational>& cos_coeffs() const { return a_; }
  const std::vector<Rational>& sin_coeffs() const { return b_; }

  bool is_zero() const { return a_.empty(); }
  /// Highest harmonic K; 0 for constants and for the zero TrigPoly.
  std::size_t harmonic_degree() const { return a_.empty() ? 0 : a_.size() - 1; }

  double operator()(double theta) const;
  double derivative(double theta) const;
  double evaluate_source(double theta) const;

  /// |a_0| + Σ (|a_k| + |b_k|), an upper bound on max |t|.
  double sup_bound() const;
  /// Σ k (|a_k| + |b_k|), an upper bound on max |t'|.
  double lipschitz_bound() const;
  /// Σ k² (|a_k| + |b_k|), an upper bound on max |t''|.
  double curvature_bound() const;

  friend bool operator==(const TrigPoly& a, const TrigPoly& b) { return a.a_ == b.a_ && a.b_ == b.b_; }

  friend TrigPoly operator+(const TrigPoly& a, const TrigPoly& b) { return TrigPoly(a.source_ + b.source_); }
  friend TrigPoly operator-(const TrigPoly& a, const TrigPoly& b) { return TrigPoly(a.source_ - b.source_); }
  friend TrigPoly operator*(const TrigPoly& a, const TrigPoly& b) { return TrigPoly(a.source_ * b.source_); }
  friend TrigPoly operator*(const Rational& k, const TrigPoly& a) { return TrigPoly(k * a.source_); }
  TrigPoly operator-() const { return TrigPoly(-source_); }

 private:
  BivariatePoly source_;
  std::vector<Rational> a_;
  std::vector<Rational> b_;
  std::vector<double> ad_;
  std::vector<double> bd_;
};

TrigPoly canonicalize(const BivariatePoly& source);
inline bool is_identically_zero(const TrigPoly& t) { return t.is_zero(); }

/// Restriction of p to the circle of the given radius about the origin:
/// θ ↦ p(radius cos θ, radius sin θ).
TrigPoly restrict_to_circle(const BivariatePoly& p, const Rational& radius);

enum class RootKind { simple, degenerate };

struct ThetaRoot {
  double theta = 0.0;
  RootKind multiplicity_hint = RootKind::simple;
  double lo = 0.0;  ///< bracket; for simple roots the sign changes across it
  double hi = 0.0;
};

struct RootScan {
  std::vector<ThetaRoot> roots;  ///< sorted by theta in [0, 2π)
  bool degenerate = false;       ///< a touching root was flagged
};

struct RootScanOptions {
  double tol = 1e-12;
  std::size_t initial_grid = 1024;
  unsigned max_refine_depth = 14;
};

/// All zeros of t on [0, 2π). Throws poincare::Error if t is identically zero.
RootScan roots_on_circle(const TrigPoly& t, const RootScanOptions& opts = {});
inline RootScan roots_on_circle(const TrigPoly& t, double tol) {
  RootScanOptions o;
  o.tol = tol;
  return roots_on_circle(t, o);
}

/// Maximal arc on which t keeps one sign, traversed counter-clockwise from
/// `from` to `to` (to may exceed 2π when the arc wraps past θ = 0).
struct SignArc {
  double from = 0.0;
  double to = 0.0;
  int sign = 0;
};

/// Partition of the circle by the given roots of t, each arc tagged with the
/// sign of t at its midpoint. No roots gives one full arc [0, 2π].
std::vector<SignArc> sign_arcs(const TrigPoly& t, const std::vector<ThetaRoot>& roots);

enum class MinAbsStatus {
  certified,    ///< bound > 0: t has no zero
  has_root,     ///< a sign change was observed; bound = 0
  inconclusive  ///< a near-zero sample without sign change; bound = 0
};

struct MinAbsBound {
  double bound = 0.0;
  MinAbsStatus status = MinAbsStatus::inconclusive;
  double witness_theta = 0.0;  ///< sample of smallest |t|
  double witness_value = 0.0;
};

/// Certified lower bound on min_θ |t(θ)| via dense sampling plus the
/// Lipschitz bound; the grid doubles until the bound is positive. Throws
/// poincare::Error if t is identically zero.
MinAbsBound certified_min_abs(const TrigPoly& t, std::size_t initial_grid = 1024, std::size_t max_grid = std::size_t{1} << 22);

}  // namespace poincare
