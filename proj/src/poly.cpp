#include "poincare/poly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "poincare/errors.hpp"

namespace poincare {

Rational parse_rational(std::string_view text) {
  try {
    Rational r(std::string(text), 10);
    if (r.get_den() == 0) throw Error("zero denominator in rational '" + std::string(text) + "'");
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw Error("invalid rational '" + std::string(text) + "'");
  }
}

Rational rational_from_double(double v) {
  if (!std::isfinite(v)) throw Error("non-finite value has no rational form");
  Rational r(v);
  r.canonicalize();
  return r;
}

Rational best_rational(double v, long max_den) {
  // Continued-fraction convergents p_k/q_k, stopping before q exceeds max_den.
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double rem = v;
  for (int iter = 0; iter < 64; ++iter) {
    double a = std::floor(rem);
    mpz_class ai(a);
    mpz_class p2 = ai * p1 + p0;
    mpz_class q2 = ai * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    double frac = rem - a;
    if (frac < 1e-15) break;
    rem = 1.0 / frac;
  }
  if (q1 == 0) return Rational(0);
  Rational r(p1, q1);
  r.canonicalize();
  return r;
}

BivariatePoly::BivariatePoly(const Rational& constant) {
  if (constant != 0) terms_.emplace(Monomial{0, 0}, constant);
}

BivariatePoly BivariatePoly::monomial(const Rational& coeff, unsigned i, unsigned j) {
  BivariatePoly r;
  if (coeff != 0) r.terms_.emplace(Monomial{i, j}, coeff);
  return r;
}

std::optional<unsigned> BivariatePoly::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first.degree();
}

Rational BivariatePoly::coefficient(unsigned i, unsigned j) const {
  auto it = terms_.find(Monomial{i, j});
  return it == terms_.end() ? Rational(0) : it->second;
}

void BivariatePoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
  BivariatePoly r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      r.add_term(Monomial{ma.x + mb.x, ma.y + mb.y}, ca * cb);
    }
  }
  return r;
}

BivariatePoly& BivariatePoly::operator*=(const BivariatePoly& other) {
  *this = *this * other;
  return *this;
}

BivariatePoly& BivariatePoly::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

BivariatePoly BivariatePoly::operator-() const {
  BivariatePoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

double BivariatePoly::evaluate(double x, double y) const { return NumericPoly(*this)(x, y); }

Rational BivariatePoly::evaluate(const Rational& x, const Rational& y) const {
  if (terms_.empty()) return 0;
  const unsigned d = *degree();
  std::vector<Rational> xp(d + 1), yp(d + 1);
  xp[0] = 1;
  yp[0] = 1;
  for (unsigned k = 1; k <= d; ++k) {
    xp[k] = xp[k - 1] * x;
    yp[k] = yp[k - 1] * y;
  }
  Rational sum = 0;
  for (const auto& [m, c] : terms_) sum += c * xp[m.x] * yp[m.y];
  return sum;
}

std::string BivariatePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (mag != 1 || m.degree() == 0) {
      out << mag.get_str();
      wrote = true;
    }
    auto put_var = [&](char v, unsigned e) {
      if (e == 0) return;
      if (wrote) out << '*';
      out << v;
      if (e > 1) out << '^' << e;
      wrote = true;
    };
    put_var('x', m.x);
    put_var('y', m.y);
  }
  return out.str();
}

BivariatePoly add(const BivariatePoly& a, const BivariatePoly& b) { return a + b; }
BivariatePoly mul(const BivariatePoly& a, const BivariatePoly& b) { return a * b; }

BivariatePoly pow(const BivariatePoly& a, unsigned e) {
  BivariatePoly result(Rational(1));
  BivariatePoly base = a;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return result;
}

BivariatePoly partial_derivative(const BivariatePoly& a, Var var) {
  BivariatePoly r;
  for (const auto& [m, c] : a.terms()) {
    if (var == Var::x && m.x > 0) {
      r += BivariatePoly::monomial(c * m.x, m.x - 1, m.y);
    } else if (var == Var::y && m.y > 0) {
      r += BivariatePoly::monomial(c * m.y, m.x, m.y - 1);
    }
  }
  return r;
}

BivariatePoly homogeneous_part(const BivariatePoly& a, unsigned d) {
  BivariatePoly r;
  for (const auto& [m, c] : a.terms()) {
    if (m.degree() == d) r += BivariatePoly::monomial(c, m.x, m.y);
  }
  return r;
}

BivariatePoly scale_variables(const BivariatePoly& a, const Rational& factor) {
  BivariatePoly r;
  for (const auto& [m, c] : a.terms()) {
    Rational f = 1;
    for (unsigned k = 0; k < m.degree(); ++k) f *= factor;
    r += BivariatePoly::monomial(c * f, m.x, m.y);
  }
  return r;
}

NumericPoly::NumericPoly(const BivariatePoly& p) {
  terms_.reserve(p.size());
  for (const auto& [m, c] : p.terms()) {
    terms_.push_back({m.x, m.y, c.get_d()});
    degree_ = std::max(degree_, m.degree());
  }
}

namespace {

// Small integer powers without std::pow; exponents here stay below ~20.
inline double ipow(double base, unsigned e) {
  double r = 1.0;
  while (e > 0) {
    if (e & 1u) r *= base;
    base *= base;
    e >>= 1u;
  }
  return r;
}

}  // namespace

double NumericPoly::operator()(double x, double y) const {
  double sum = 0.0;
  for (const auto& t : terms_) sum += t.c * ipow(x, t.i) * ipow(y, t.j);
  return sum;
}

double NumericPoly::abs_sum(double x, double y) const {
  double sum = 0.0;
  const double ax = std::fabs(x), ay = std::fabs(y);
  for (const auto& t : terms_) sum += std::fabs(t.c) * ipow(ax, t.i) * ipow(ay, t.j);
  return sum;
}

PlanarPolySystem::PlanarPolySystem(BivariatePoly p, BivariatePoly q)
    : p_(std::move(p)), q_(std::move(q)) {
  if (p_.is_zero() && q_.is_zero()) throw Error("system has both components identically zero");
  m_ = std::max(p_.degree().value_or(0), q_.degree().value_or(0));
  p_parts_.reserve(m_ + 1);
  q_parts_.reserve(m_ + 1);
  for (unsigned d = 0; d <= m_; ++d) {
    p_parts_.push_back(homogeneous_part(p_, d));
    q_parts_.push_back(homogeneous_part(q_, d));
  }
  p_num_ = NumericPoly(p_);
  q_num_ = NumericPoly(q_);
}

}  // namespace poincare
