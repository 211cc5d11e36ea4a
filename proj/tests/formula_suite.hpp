#pragma once

// Closed-form linearizations of the two modification families, checked
// against local-analysis on random admissible W.

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "poincare/local.hpp"
#include "poincare/modification.hpp"
#include "test_util.hpp"

namespace formulas {

using namespace poincare;

/// Σ q_i² + (x²+y²)^(n/2) / 8 + 1/2 with deg q_i <= n/2: positive with a
/// positive definite top part.
inline BivariatePoly admissible_w(std::mt19937_64& rng, unsigned n) {
  const BivariatePoly r2 = parse_poly("x^2+y^2");
  BivariatePoly w = pow(r2, n / 2) * make_rational(1, 8) + BivariatePoly(make_rational(1, 2));
  for (int i = 0; i < 2; ++i) {
    const BivariatePoly q = testutil::random_poly(rng, n / 2, 3);
    w += q * q;
  }
  return w;
}

struct Mismatch {
  std::string what;
  double got;
  double want;
};

inline void expect(std::vector<Mismatch>& out, const std::string& what, double got, double want, double rel = 1e-8) {
  if (!(std::fabs(got - want) <= rel * std::max(1.0, std::fabs(want)))) out.push_back({what, got, want});
}

/// P4 family at O, A = (1/2, √35/2), B = (1/2, −√35/2).
inline std::vector<Mismatch> check_p4(const BivariatePoly& w) {
  std::vector<Mismatch> bad;
  const PlanarPolySystem s = build_modified_system(ModificationSpec(w, Family::p4), std::nullopt);
  const double r35 = std::sqrt(35.0), ya = r35 / 2.0;
  const double w0 = w.evaluate(0.0, 0.0), wa = w.evaluate(0.5, ya), wb = w.evaluate(0.5, -ya);
  const LinearizationReport o = linearize(s, {0.0, 0.0});
  const LinearizationReport a = linearize(s, {0.5, ya});
  const LinearizationReport b = linearize(s, {0.5, -ya});
  expect(bad, "tau(O)", o.trace, 18.0);
  expect(bad, "det(O)", o.det, 81.0 + 64.0 * w0 * w0);
  expect(bad, "disc(O)", o.discriminant, -256.0 * w0 * w0);
  expect(bad, "det(B)", b.det, -144.0 * r35 * wb);
  expect(bad, "tau(A)", a.trace, 144.0 + r35 * wa);
  expect(bad, "disc(A)", a.discriminant, std::pow(144.0 - r35 * wa, 2));
  if (o.cls != FixedPointClass::unstable_spiral) bad.push_back({"class(O)", 0, 0});
  if (a.cls != FixedPointClass::unstable_node) bad.push_back({"class(A)", 0, 0});
  if (b.cls != FixedPointClass::saddle) bad.push_back({"class(B)", 0, 0});
  return bad;
}

/// P5 family at the origin and at (0, ±1/√2).
inline std::vector<Mismatch> check_p5(const BivariatePoly& w, const Rational& c) {
  std::vector<Mismatch> bad;
  const PlanarPolySystem s = build_modified_system(ModificationSpec(w, Family::p5), c);
  const double cd = c.get_d(), w0 = w.evaluate(0.0, 0.0);
  const LinearizationReport o = linearize(s, {0.0, 0.0});
  expect(bad, "det(origin)", o.det, -(cd * cd + w0 * w0));
  if (o.cls != FixedPointClass::saddle) bad.push_back({"class(origin)", 0, 0});
  for (double y : {std::sqrt(0.5), -std::sqrt(0.5)}) {
    const LinearizationReport sp = linearize(s, {0.0, y});
    expect(bad, "tau(spiral)", sp.trace, -4.0 * (0.25 + cd));
  }
  return bad;
}

/// 16 random W for each family; c cycles through {−1, −1/8, 0, 1}.
inline std::vector<Mismatch> run_suite(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Rational cs[] = {-1, make_rational(-1, 8), 0, 1};
  std::vector<Mismatch> bad;
  for (int n = 0; n < 16; ++n) {
    for (auto& m : check_p4(admissible_w(rng, 2 + 2 * (n % 2)))) bad.push_back(m);
    for (auto& m : check_p5(admissible_w(rng, 4 + 2 * (n % 2)), cs[n % 4])) bad.push_back(m);
  }
  return bad;
}

}  // namespace formulas
