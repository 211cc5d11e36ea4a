#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "poincare/catalog.hpp"
#include "poincare/errors.hpp"
#include "poincare/local.hpp"
#include "poincare/ode.hpp"
#include "test_util.hpp"

using namespace poincare;
using std::numbers::pi;

namespace {

double nearest(const FixedPointSet& fps, Vec2 w) {
  double best = INFINITY;
  for (const auto& p : fps.points) best = std::min(best, std::hypot(p.point.x - w.x, p.point.y - w.y));
  return best;
}

}  // namespace

TEST_CASE("classify covers every trace/det region") {
  CHECK(classify(0.0, -1.0, 1e-12, 1e-12) == FixedPointClass::saddle);
  CHECK(classify(-3.0, 2.0, 1e-12, 1e-12) == FixedPointClass::stable_node);
  CHECK(classify(3.0, 2.0, 1e-12, 1e-12) == FixedPointClass::unstable_node);
  CHECK(classify(-2.0, 2.0, 1e-12, 1e-12) == FixedPointClass::stable_spiral);
  CHECK(classify(2.0, 2.0, 1e-12, 1e-12) == FixedPointClass::unstable_spiral);
  CHECK(classify(0.0, 2.0, 1e-12, 1e-12) == FixedPointClass::center_or_fine);
  CHECK(classify(1.0, 0.0, 1e-12, 1e-12) == FixedPointClass::degenerate);
  // Repeated eigenvalue counts as a node.
  CHECK(classify(2.0, 1.0, 1e-12, 1e-12) == FixedPointClass::unstable_node);

  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int n = 0; n < 10000; ++n) {
    const double tr = u(rng), det = u(rng);
    const FixedPointClass c = classify(tr, det, 1e-12, 1e-12);
    if (det < 0) REQUIRE(c == FixedPointClass::saddle);
    if (det > 0 && tr * tr - 4 * det < 0) REQUIRE((c == FixedPointClass::stable_spiral || c == FixedPointClass::unstable_spiral));
    if (det > 0 && tr * tr - 4 * det >= 0) REQUIRE((c == FixedPointClass::stable_node || c == FixedPointClass::unstable_node));
  }
}

TEST_CASE("property: Jacobian agrees with central differences") {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int n = 0; n < 200; ++n) {
    const PlanarPolySystem s(testutil::random_poly(rng, 5, 6) + BivariatePoly::var_x(), testutil::random_poly(rng, 5, 6));
    const JacobianPoly j = jacobian(s);
    const double x = u(rng), y = u(rng), h = 1e-5;
    const Vec2 fxp = s.field(x + h, y), fxm = s.field(x - h, y), fyp = s.field(x, y + h), fym = s.field(x, y - h);
    const double fd[2][2] = {{(fxp.x - fxm.x) / (2 * h), (fyp.x - fym.x) / (2 * h)},
                             {(fxp.y - fxm.y) / (2 * h), (fyp.y - fym.y) / (2 * h)}};
    const double scale = s.field_scale(std::fabs(x) + 1, std::fabs(y) + 1);
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) REQUIRE(std::fabs(j[a][b].evaluate(x, y) - fd[a][b]) <= 1e-5 * scale);
  }
}

TEST_CASE("P3 origin") {
  const PlanarPolySystem s = get_example(ExampleName::P3);
  const ExactLinearization e = linearize_exact(s, 0, 0);
  CHECK(e.trace == -2);
  CHECK(e.det == 2);
  CHECK(e.cls == FixedPointClass::stable_spiral);
  CHECK_THROWS_AS(linearize(s, {1.0, 1.0}), NotAFixedPoint);
  CHECK_THROWS_AS(linearize_exact(s, 1, 0), NotAFixedPoint);
}

TEST_CASE("P4 fixed points") {
  const PlanarPolySystem s = get_example(ExampleName::P4);
  const FixedPointSet fps = find_fixed_points(s, Box::square(5), 64);
  REQUIRE(fps.points.size() == 3);
  // r^2 C1 C2 = 0 and r^2 C3 = 0 force r = 3 and x = 1/2.
  const double ya = std::sqrt(35.0) / 2.0;
  const Vec2 want[3] = {{0.0, 0.0}, {0.5, -ya}, {0.5, ya}};
  for (const Vec2& w : want) CHECK(nearest(fps, w) < 1e-10);
  CHECK(linearize(s, want[0]).cls == FixedPointClass::unstable_spiral);
  CHECK(linearize(s, want[2]).cls == FixedPointClass::unstable_node);
  CHECK(linearize(s, want[1]).cls == FixedPointClass::saddle);
  const ExactLinearization o = linearize_exact(s, 0, 0);
  CHECK(o.trace == 18);
  CHECK(o.det == 145);
}

TEST_CASE("P5 fixed points") {
  for (const char* c : {"-1", "-1/8", "0", "1"}) {
    const PlanarPolySystem s = get_example(ExampleName::P5, parse_rational(c));
    const FixedPointSet fps = find_fixed_points(s, Box::square(3), 64);
    REQUIRE(fps.points.size() == 3);
    for (double y : {-std::sqrt(0.5), 0.0, std::sqrt(0.5)}) CHECK(nearest(fps, {0.0, y}) < 1e-10);
    CHECK(linearize(s, {0.0, 0.0}).cls == FixedPointClass::saddle);
  }
}

TEST_CASE("Newton") {
  const PlanarPolySystem s({parse_poly("x^2-2"), parse_poly("y-x")});
  const NewtonField f(s);
  const NewtonResult r = newton_solve(f, {1.0, 0.0});
  CHECK(r.converged);
  CHECK(std::fabs(r.point.x - std::sqrt(2.0)) < 1e-13);
  CHECK(std::fabs(r.point.y - std::sqrt(2.0)) < 1e-13);
  // No real fixed points.
  const PlanarPolySystem none(parse_poly("x^2+1"), parse_poly("y"));
  CHECK(find_fixed_points(none, Box::square(4), 16).points.empty());
}

TEST_CASE("P4 invariant circles") {
  const PlanarPolySystem s = get_example(ExampleName::P4);
  CHECK(invariant_circle_check(s, 1).invariant);
  CHECK(invariant_circle_check(s, 3).invariant);
  const CircleCheck two = invariant_circle_check(s, 2);
  CHECK_FALSE(two.invariant);
  CHECK(radial_on_circle(s, 2)(two.witness_theta) != doctest::Approx(0.0));
  CHECK(scan_invariant_circles(s, {}) == std::vector<Rational>{1, 3});

  const auto r1 = arc_flow_signs(s, 1);
  REQUIRE(r1.size() == 1);
  CHECK(r1[0].sign == -1);

  // On r = 3, dθ/dt ∝ C3 = 1 − 6 cos θ: negative on the arc containing θ = 0.
  const auto r3 = arc_flow_signs(s, 3);
  REQUIRE(r3.size() == 2);
  const double th0 = std::acos(1.0 / 6.0);
  for (const auto& a : r3) {
    const double mid = 0.5 * (a.from + a.to);
    CHECK(a.sign == (std::cos(mid) > 1.0 / 6.0 ? -1 : 1));
    CHECK((std::fabs(std::remainder(a.from - th0, 2 * pi)) < 1e-9 || std::fabs(std::remainder(a.from + th0, 2 * pi)) < 1e-9));
  }
  CHECK_THROWS_AS(arc_flow_signs(s, 2), Error);
}

TEST_CASE("P4 heteroclinic arcs stay on r = 3") {
  const PlanarPolySystem s = get_example(ExampleName::P4);
  const double ya = std::sqrt(35.0) / 2.0;
  const double theta_a = std::atan2(ya, 0.5);
  ode::AdaptiveOptions o;
  o.tol = 1e-12;

  // Cartesian run: r = 3 repels at rate about 144, so only a short window
  // keeps rounding below 1e-6.
  for (double dir : {1.0, -1.0}) {
    const double th = theta_a + dir * 1e-2;
    double worst = 0.0;
    ode::integrate([&](Vec2 p) { return s.field(p); }, Vec2{3.0 * std::cos(th), 3.0 * std::sin(th)}, 0.05, o,
                   [&](double, Vec2 p) {
                     worst = std::max(worst, std::fabs(std::hypot(p.x, p.y) - 3.0));
                     return true;
                   });
    CHECK(worst < 1e-6);
  }

  // Flow restricted to the circle: dθ/dt = (x Q − y P) / 9 ends at B both ways.
  const TrigPoly ang = angular_on_circle(s, 3);
  for (double dir : {1.0, -1.0}) {
    Vec2 th{theta_a + dir * 1e-3, 0.0};
    ode::integrate([&](Vec2 p) { return Vec2{ang(p.x) / 9.0, 0.0}; }, th, 10.0, o, [&](double, Vec2 p) {
      th = p;
      return true;
    });
    CHECK(std::fabs(std::remainder(th.x + theta_a, 2 * pi)) < 1e-6);
  }
}
