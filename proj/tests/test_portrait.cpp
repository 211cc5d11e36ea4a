#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "poincare/catalog.hpp"
#include "poincare/errors.hpp"
#include "poincare/modification.hpp"
#include "poincare/ode.hpp"
#include "poincare/portrait.hpp"

using namespace poincare;
using std::numbers::pi;

namespace {

double endpoint_error(double tol) {
  ode::AdaptiveOptions o;
  o.tol = tol;
  Vec2 end{1.0, 0.0};
  ode::integrate([](Vec2 p) { return Vec2{-p.y, p.x}; }, Vec2{1.0, 0.0}, 2 * pi, o, [&](double, Vec2 p) {
    end = p;
    return true;
  });
  return std::hypot(end.x - 1.0, end.y);
}

}  // namespace

TEST_CASE("integrator order on the rotation field") {
  const double e9 = endpoint_error(1e-9);
  CHECK(e9 < 1e-7);
  // Order >= 4: error scales like tol^(p/(p+1)), at least 0.8 per decade of tol.
  double prev = endpoint_error(1e-6);
  for (double tol : {1e-7, 1e-8, 1e-9, 1e-10}) {
    const double e = endpoint_error(tol);
    CHECK(e < prev);
    prev = e;
  }
  CHECK(std::log10(endpoint_error(1e-6) / endpoint_error(1e-10)) > 4 * 0.7);
}

TEST_CASE("to_disk") {
  const Vec2 o = to_disk({0.0, 0.0});
  CHECK(o.x == 0.0);
  CHECK(o.y == 0.0);
  CHECK(to_disk({1.0, 0.0}).x == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(to_disk({1e9, 0.0}).x == doctest::Approx(1.0));
  for (double th = 0.0; th < 2 * pi; th += 0.3) {
    double prev = -1.0;
    for (double r = 0.0; r < 1e6; r = 2 * r + 0.1) {
      const Vec2 d = to_disk({r * std::cos(th), r * std::sin(th)});
      const double rho = std::hypot(d.x, d.y);
      REQUIRE(rho < 1.0);
      REQUIRE(rho > prev);
      prev = rho;
    }
  }
  CHECK(equator_distance({3.0, 4.0}) == doctest::Approx(1.0 / std::sqrt(26.0)));
}

TEST_CASE("option validation") {
  PortraitSpec s;
  CHECK_NOTHROW(validate(s));
  s.tol = 1e-2;
  CHECK_THROWS_AS(validate(s), Error);
  s.tol = 1e-9;
  s.disk_margin = 0.1;
  CHECK_THROWS_AS(validate(s), Error);
  s.disk_margin = 0.0;
  CHECK_THROWS_AS(validate(s), Error);
}

TEST_CASE("P4 from (0.5, 0) is attracted to r = 1") {
  PortraitSpec s;
  s.t_span = 40.0;
  const Trajectory tr = integrate(get_example(ExampleName::P4), {0.5, 0.0}, s, TimeDirection::forward);
  const Sample& last = tr.samples.back();
  CHECK(std::fabs(std::hypot(last.x, last.y) - 1.0) < 1e-3);
}

TEST_CASE("P3 inside r = 1 spirals into the origin") {
  PortraitSpec s;
  s.t_span = 30.0;
  const Trajectory tr = integrate(get_example(ExampleName::P3), {0.5, 0.0}, s, TimeDirection::forward);
  CHECK(std::hypot(tr.samples.back().x, tr.samples.back().y) < 1e-6);
}

TEST_CASE("P3 outside r = 1 winds out to the equator") {
  PortraitSpec s;
  s.t_span = 100.0;
  const Trajectory tr = integrate(get_example(ExampleName::P3), {1.5, 0.0}, s, TimeDirection::forward);
  CHECK(tr.termination == Termination::near_equator);
  double prev = 0.0, unwrapped = 0.0;
  for (std::size_t i = 1; i < tr.samples.size(); ++i) {
    const double a = std::atan2(tr.samples[i].y, tr.samples[i].x), b = std::atan2(tr.samples[i - 1].y, tr.samples[i - 1].x);
    const double step = std::remainder(a - b, 2 * pi);
    REQUIRE(step > 0.0);
    unwrapped += step;
    REQUIRE(unwrapped > prev);
    prev = unwrapped;
  }
  CHECK(equator_distance({tr.samples.back().x, tr.samples.back().y}) <= s.disk_margin * (1 + 1e-9));
}

TEST_CASE("fixed point seeds stay put") {
  PortraitSpec s;
  for (const Vec2 seed : {Vec2{0.0, 0.0}, Vec2{0.5, std::sqrt(35.0) / 2.0}}) {
    const TrajectoryPair tp = integrate_both(get_example(ExampleName::P4), seed, s);
    for (const Trajectory* tr : {&tp.forward, &tp.backward}) {
      for (const Sample& p : tr->samples) REQUIRE(std::hypot(p.x - seed.x, p.y - seed.y) < 1e-9);
      CHECK(tr->termination == Termination::fixed_point);
    }
  }
}

TEST_CASE("backward runs carry negative time") {
  PortraitSpec s;
  s.t_span = 1.0;
  const Trajectory tr = integrate(get_example(ExampleName::P3), {0.5, 0.0}, s, TimeDirection::backward);
  REQUIRE(tr.samples.size() > 2);
  CHECK(tr.samples.front().t == 0.0);
  for (std::size_t i = 1; i < tr.samples.size(); ++i) REQUIRE(tr.samples[i].t < tr.samples[i - 1].t);
}

TEST_CASE("P5 family: C is monotone along trajectories with C > 0") {
  const Rational c = make_rational(-1, 8);
  const PlanarPolySystem sys = build_modified_system(ModificationSpec(parse_poly("x^4+y^4+1"), Family::p5), c);
  const NumericPoly cn(p5_c(c));
  PortraitSpec s;
  s.t_span = 5.0;
  for (const Vec2 seed : {Vec2{0.8, 0.0}, Vec2{0.1, 1.0}, Vec2{-1.2, 0.3}}) {
    REQUIRE(cn(seed.x, seed.y) > 0.0);
    const Trajectory tr = integrate(sys, seed, s, TimeDirection::forward);
    for (std::size_t i = 1; i < tr.samples.size(); ++i)
      REQUIRE(cn(tr.samples[i].x, tr.samples[i].y) >= cn(tr.samples[i - 1].x, tr.samples[i - 1].y) * (1 - 1e-12));
  }
}

TEST_CASE("default seeds") {
  PortraitSpec s;
  s.seeds = {{0.25, 0.25}};
  const auto seeds = portrait_seeds(s);
  REQUIRE(seeds.size() == 49);
  CHECK(seeds[0].x == 0.25);
  CHECK(std::hypot(seeds[1].x, seeds[1].y) == doctest::Approx(0.5));
  CHECK(std::hypot(seeds[48].x, seeds[48].y) == doctest::Approx(6.0));
  s.default_seeds = false;
  CHECK(portrait_seeds(s).size() == 1);
}

TEST_CASE("render with no seeds draws the disk and fixed points only") {
  PortraitSpec s;
  s.default_seeds = false;
  const std::string svg = render(get_example(ExampleName::P4), s, PortraitFormat::svg);
  CHECK(svg.find("viewBox=\"-1.05 -1.05 2.1 2.1\"") != std::string::npos);
  CHECK(svg.find("<polyline") == std::string::npos);
  CHECK(svg.find("data-class=\"unstable spiral\"") != std::string::npos);
  CHECK(svg.find("data-class=\"saddle\"") != std::string::npos);

  const std::string csv = render(get_example(ExampleName::P4), s, PortraitFormat::csv);
  CHECK(csv == "traj_id,t,x,y,u,v\n");
}

TEST_CASE("CSV rows") {
  PortraitSpec s;
  s.default_seeds = false;
  s.seeds = {{0.5, 0.0}, {2.0, 0.0}};
  s.t_span = 1.0;
  std::istringstream in(render(get_example(ExampleName::P3), s, PortraitFormat::csv));
  std::string line;
  std::getline(in, line);
  CHECK(line == "traj_id,t,x,y,u,v");
  int rows = 0, last_id = 0;
  double last_t = -INFINITY;
  while (std::getline(in, line)) {
    int id = 0;
    double t = 0, x = 0, y = 0, u = 0, v = 0;
    REQUIRE(std::sscanf(line.c_str(), "%d,%lf,%lf,%lf,%lf,%lf", &id, &t, &x, &y, &u, &v) == 6);
    if (id != last_id) last_t = -INFINITY;
    REQUIRE(id >= last_id);
    REQUIRE(t > last_t);
    const Vec2 d = to_disk({x, y});
    REQUIRE(std::fabs(d.x - u) < 1e-9);
    REQUIRE(std::fabs(d.y - v) < 1e-9);
    last_id = id;
    last_t = t;
    ++rows;
  }
  CHECK(last_id == 1);
  CHECK(rows > 10);
}

TEST_CASE("winding from (10, 0)") {
  PortraitSpec s;
  s.t_span = 1e3;
  s.disk_margin = 0.05;
  const Trajectory p4 = integrate(get_example(ExampleName::P4), {10.0, 0.0}, s, TimeDirection::forward);
  CHECK(p4.termination == Termination::near_equator);
  CHECK(total_winding(p4) < pi / 2);
  const Trajectory r4 = integrate(get_example(ExampleName::R4), {10.0, 0.0}, s, TimeDirection::forward);
  CHECK(r4.termination == Termination::near_equator);
  CHECK(total_winding(r4) > total_winding(p4));
}
