#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "poincare/rational.hpp"

namespace poincare {

/// Exponent pair of x^i y^j.
struct Monomial {
  unsigned x = 0;
  unsigned y = 0;

  unsigned degree() const { return x + y; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded-lexicographic order, highest degree first, then highest power of x.
struct GradedLexDesc {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    return a.x > b.x;
  }
};

enum class Var { x, y };

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

/// Sparse polynomial in x, y with exact rational coefficients. No stored
/// coefficient is ever zero.
class BivariatePoly {
 public:
  using TermMap = std::map<Monomial, Rational, GradedLexDesc>;

  BivariatePoly() = default;
  explicit BivariatePoly(const Rational& constant);

  static BivariatePoly monomial(const Rational& coeff, unsigned i, unsigned j);
  static BivariatePoly var_x() { return monomial(1, 1, 0); }
  static BivariatePoly var_y() { return monomial(1, 0, 1); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Total degree; std::nullopt for the zero polynomial.
  std::optional<unsigned> degree() const;
  Rational coefficient(unsigned i, unsigned j) const;

  BivariatePoly& operator+=(const BivariatePoly& other);
  BivariatePoly& operator-=(const BivariatePoly& other);
  BivariatePoly& operator*=(const BivariatePoly& other);
  BivariatePoly& operator*=(const Rational& scalar);

  friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
  friend BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b) { return a -= b; }
  friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b);
  friend BivariatePoly operator*(BivariatePoly a, const Rational& s) { return a *= s; }
  friend BivariatePoly operator*(const Rational& s, BivariatePoly a) { return a *= s; }
  BivariatePoly operator-() const;

  friend bool operator==(const BivariatePoly& a, const BivariatePoly& b) { return a.terms_ == b.terms_; }

  double evaluate(double x, double y) const;
  Rational evaluate(const Rational& x, const Rational& y) const;

  /// Canonical text form, e.g. "x^4 + 2*x^2*y^2 - 10*x^2 + 9". Parseable by parse_poly.
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  TermMap terms_;
};

BivariatePoly add(const BivariatePoly& a, const BivariatePoly& b);
BivariatePoly mul(const BivariatePoly& a, const BivariatePoly& b);
BivariatePoly pow(const BivariatePoly& a, unsigned e);
BivariatePoly partial_derivative(const BivariatePoly& a, Var var);
BivariatePoly homogeneous_part(const BivariatePoly& a, unsigned d);

/// a(factor*x, factor*y).
BivariatePoly scale_variables(const BivariatePoly& a, const Rational& factor);

/// Parses the polynomial grammar
///   expr := term (('+'|'-') term)* ; term := factor ('*' factor)* ;
///   factor := base ('^' nonneg-int)? ; base := 'x' | 'y' | rational | '(' expr ')'
/// Throws ParseError with the byte offset of the failure.
BivariatePoly parse_poly(std::string_view text);

/// Max exponent accepted after '^'.
inline constexpr unsigned kMaxParsedExponent = 256;

/// Double-precision copy of a polynomial for fast repeated evaluation.
class NumericPoly {
 public:
  NumericPoly() = default;
  explicit NumericPoly(const BivariatePoly& p);

  double operator()(double x, double y) const;
  /// Sum of |c| |x|^i |y|^j; a scale for rounding-error estimates.
  double abs_sum(double x, double y) const;
  unsigned degree() const { return degree_; }

 private:
  struct Term {
    unsigned i;
    unsigned j;
    double c;
  };
  std::vector<Term> terms_;
  unsigned degree_ = 0;
};

/// dx/dt = P(x, y), dy/dt = Q(x, y).
class PlanarPolySystem {
 public:
  /// Throws poincare::Error if both components are zero.
  PlanarPolySystem(BivariatePoly p, BivariatePoly q);

  const BivariatePoly& p() const { return p_; }
  const BivariatePoly& q() const { return q_; }
  unsigned degree() const { return m_; }

  /// Homogeneous parts of degree d, d = 0..m.
  const BivariatePoly& p_part(unsigned d) const { return p_parts_.at(d); }
  const BivariatePoly& q_part(unsigned d) const { return q_parts_.at(d); }

  Vec2 field(double x, double y) const { return {p_num_(x, y), q_num_(x, y)}; }
  Vec2 field(Vec2 z) const { return field(z.x, z.y); }
  /// |P|+|Q| evaluated with absolute coefficients; used to scale residuals.
  double field_scale(double x, double y) const { return 1.0 + p_num_.abs_sum(x, y) + q_num_.abs_sum(x, y); }

 private:
  BivariatePoly p_;
  BivariatePoly q_;
  unsigned m_ = 0;
  std::vector<BivariatePoly> p_parts_;
  std::vector<BivariatePoly> q_parts_;
  NumericPoly p_num_;
  NumericPoly q_num_;
};

}  // namespace poincare
