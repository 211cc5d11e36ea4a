#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "poincare/catalog.hpp"
#include "poincare/errors.hpp"
#include "poincare/local.hpp"
#include "poincare/modification.hpp"
#include "formula_suite.hpp"
#include "test_util.hpp"

using namespace poincare;

namespace {

HypothesisReport check(const char* w, Family f) { return check_modification(ModificationSpec(parse_poly(w), f)); }

using formulas::admissible_w;

bool near(Vec2 a, Vec2 b, double tol) { return std::hypot(a.x - b.x, a.y - b.y) < tol; }

}  // namespace

TEST_CASE("hypotheses: reference cases") {
  const HypothesisReport r4 = check("x^2+y^2+1", Family::p4);
  CHECK(r4.overall == Overall::pass);
  CHECK(r4.degree_ok);
  CHECK(r4.positivity == CheckStatus::certified);
  CHECK(r4.leading_positive_definite == CheckStatus::certified);

  CHECK(check("x^4+y^4+1", Family::p5).overall == Overall::pass);

  const HypothesisReport one = check("1", Family::p4);
  CHECK(one.overall == Overall::fail);
  CHECK_FALSE(one.degree_ok);

  const HypothesisReport r2 = check("x^2+y^2", Family::p4);
  CHECK(r2.overall == Overall::fail);
  CHECK(r2.positivity == CheckStatus::falsified);
  REQUIRE(r2.positivity_witness);
  CHECK(parse_poly("x^2+y^2").evaluate(r2.positivity_witness->x, r2.positivity_witness->y) <= 0.0);

  CHECK_FALSE(check("x^2+y^2+1", Family::p5).degree_ok);

  const HypothesisReport indef = check("x^2-y^2+5", Family::p4);
  CHECK(indef.leading_positive_definite == CheckStatus::falsified);
  CHECK(indef.overall == Overall::fail);

  const HypothesisReport dip = check("(x^2+y^2-4)^2 - 1/100", Family::p4);
  CHECK(dip.positivity == CheckStatus::falsified);

  CHECK_THROWS_AS(ModificationSpec(BivariatePoly(), Family::p4), Error);
}

TEST_CASE("P5 family needs c") {
  const ModificationSpec spec(parse_poly("x^4+y^4+1"), Family::p5);
  CHECK_THROWS_AS(build_modified_system(spec, std::nullopt), MissingParameter);
  CHECK_THROWS_AS(full_report(spec, std::nullopt), MissingParameter);
}

TEST_CASE("conserved quantities are exact") {
  const BivariatePoly r2 = parse_poly("x^2+y^2");
  const PlanarPolySystem p3 = get_example(ExampleName::P3);
  CHECK(conserved_quantity_residual(p3, parse_poly("x^2+y^2-1"), BivariatePoly(2) * r2).is_zero());

  const BivariatePoly c1c2 = parse_poly("(x^2+y^2-1)*(x^2+y^2-9)");
  std::mt19937_64 rng(47);
  for (int n = 0; n < 8; ++n) {
    const ModificationSpec p4(admissible_w(rng, 2 + 2 * (n % 2)), Family::p4);
    CHECK(conserved_quantity_residual(build_modified_system(p4, std::nullopt), r2, BivariatePoly(2) * c1c2).is_zero());

    const ModificationSpec p5(admissible_w(rng, 4), Family::p5);
    const Rational c = testutil::random_rational(rng);
    const BivariatePoly a = p5_a(), b = p5_b();
    const BivariatePoly factor = BivariatePoly(2) * (a * a + b * b);
    CHECK(conserved_quantity_residual(build_modified_system(p5, c), p5_c(c), factor).is_zero());
    CHECK_FALSE(conserved_quantity_residual(build_modified_system(p5, c), p5_c(c + 1), factor).is_zero());
  }
}

TEST_CASE("reference reports are consistent") {
  const FullReport r4 = full_report(ModificationSpec(parse_poly("x^2+y^2+1"), Family::p4), std::nullopt);
  CHECK(r4.status == ReportStatus::consistent);
  CHECK(r4.failures() == 0);
  for (const char* c : {"-1", "-1/8", "0", "1", "-1/4"}) {
    const FullReport r5 = full_report(ModificationSpec(parse_poly("x^4+y^4+1"), Family::p5), parse_rational(c));
    CHECK_MESSAGE(r5.status == ReportStatus::consistent, c);
  }
  const FullReport bad = full_report(ModificationSpec(BivariatePoly(1), Family::p4), std::nullopt);
  CHECK(bad.status == ReportStatus::hypotheses_failed);
  CHECK(bad.infinity.verdict == Verdict::all_points_fixed);
}

TEST_CASE("property: random admissible W, P4 family") {
  std::mt19937_64 rng(53);
  const double ya = std::sqrt(35.0) / 2.0;
  for (int n = 0; n < 16; ++n) {
    const BivariatePoly w = admissible_w(rng, 2 + 2 * (n % 2));
    const ModificationSpec spec(w, Family::p4);
    const FullReport rep = full_report(spec, std::nullopt);
    INFO("W = ", w.to_string());
    REQUIRE(rep.hypotheses.overall == Overall::pass);
    CHECK(rep.status == ReportStatus::consistent);
    CHECK(rep.infinity.verdict == Verdict::cycle_at_infinity);

    // Jacobian at O: [[9, 8 W(0)], [−8 W(0), 9]].
    const double w0 = w.evaluate(0.0, 0.0);
    const LinearizationReport o = linearize(rep.system, {0.0, 0.0});
    CHECK(std::fabs(o.trace - 18.0) < 1e-8);
    CHECK(std::fabs(o.det - (81.0 + 64.0 * w0 * w0)) < 1e-8 * (1.0 + o.det));

    const FixedPointSet fps = find_fixed_points(rep.system, Box::square(5), 64);
    CHECK(fps.points.size() == 3);
    int hits = 0;
    for (const auto& p : fps.points)
      hits += near(p.point, {0.0, 0.0}, 1e-8) + near(p.point, {0.5, ya}, 1e-8) + near(p.point, {0.5, -ya}, 1e-8);
    CHECK(hits == 3);
  }
}

TEST_CASE("property: random admissible W, P5 family") {
  std::mt19937_64 rng(59);
  const double y0 = std::sqrt(0.5);
  for (int n = 0; n < 16; ++n) {
    const BivariatePoly w = admissible_w(rng, 4 + 2 * (n % 2));
    const Rational c = testutil::random_rational(rng);
    const ModificationSpec spec(w, Family::p5);
    const FullReport rep = full_report(spec, c);
    INFO("W = ", w.to_string(), ", c = ", c.get_str());
    REQUIRE(rep.hypotheses.overall == Overall::pass);
    CHECK(rep.status == ReportStatus::consistent);

    // At (0, ±1/√2): A = B = 0, ∇A = (2, 0), ∇B = (0, 2), so
    // J = [[2C, −2W], [2W, 2C]] with C = −1/4 − c.
    const double cc = -0.25 - c.get_d();
    for (double sgn : {1.0, -1.0}) {
      const double wv = w.evaluate(0.0, sgn * y0);
      const LinearizationReport l = linearize(rep.system, {0.0, sgn * y0});
      CHECK(std::fabs(l.trace - 4.0 * cc) < 1e-8);
      CHECK(std::fabs(l.det - 4.0 * (cc * cc + wv * wv)) < 1e-8 * (1.0 + l.det));
    }
    CHECK(linearize(rep.system, {0.0, 0.0}).cls == FixedPointClass::saddle);
  }
}

TEST_CASE("closed-form linearization suite") {
  const auto bad = formulas::run_suite(61);
  for (const auto& m : bad) FAIL_CHECK(m.what << ": got " << m.got << ", want " << m.want);
  CHECK(bad.empty());
}
