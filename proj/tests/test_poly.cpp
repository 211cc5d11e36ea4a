#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "poincare/errors.hpp"
#include "poincare/poly.hpp"
#include "test_util.hpp"

using namespace poincare;

namespace {

// Dense convolution, independent of the sparse term map.
BivariatePoly dense_product(const BivariatePoly& a, const BivariatePoly& b) {
  const unsigned da = a.degree().value_or(0), db = b.degree().value_or(0);
  const unsigned n = da + db + 1;
  std::vector<std::vector<Rational>> grid(n, std::vector<Rational>(n));
  for (unsigned i = 0; i <= da; ++i)
    for (unsigned j = 0; i + j <= da; ++j)
      for (unsigned k = 0; k <= db; ++k)
        for (unsigned l = 0; k + l <= db; ++l) grid[i + k][j + l] += a.coefficient(i, j) * b.coefficient(k, l);
  BivariatePoly out;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      if (grid[i][j] != 0) out += BivariatePoly::monomial(grid[i][j], i, j);
  return out;
}

}  // namespace

TEST_CASE("rational is kept reduced") {
  const Rational r = make_rational(6, -4);
  CHECK(r.get_num() == -3);
  CHECK(r.get_den() == 2);
  CHECK(parse_rational("-10/4") == make_rational(-5, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK(best_rational(0.3333333333333, 10) == make_rational(1, 3));
}

TEST_CASE("add") {
  const BivariatePoly x = BivariatePoly::var_x();
  CHECK((x + (-x)).is_zero());
  CHECK(add(parse_poly("x^2+y^2-9"), parse_poly("-2*x+1")) == parse_poly("x^2+y^2-2*x-8"));
  CHECK(parse_poly("x^2*y") + parse_poly("x^2*y") == parse_poly("2*x^2*y"));
}

TEST_CASE("mul") {
  const BivariatePoly c1 = parse_poly("x^2+y^2-1"), c2 = parse_poly("x^2+y^2-9");
  const BivariatePoly want = BivariatePoly::monomial(1, 4, 0) + BivariatePoly::monomial(2, 2, 2) +
                             BivariatePoly::monomial(1, 0, 4) + BivariatePoly::monomial(-10, 2, 0) +
                             BivariatePoly::monomial(-10, 0, 2) + BivariatePoly(9);
  CHECK(mul(c1, c2) == want);
  CHECK(mul(c1, c2) == dense_product(c1, c2));
  CHECK(mul(c1, BivariatePoly()).is_zero());
  CHECK(mul(parse_poly("x+y"), parse_poly("x-y")) == parse_poly("x^2-y^2"));
}

TEST_CASE("degree") {
  CHECK_FALSE(BivariatePoly().degree().has_value());
  CHECK(BivariatePoly(3).degree() == 0u);
  CHECK(parse_poly("x*y^3 + x^2").degree() == 4u);
}

TEST_CASE("partial derivative") {
  const BivariatePoly c = parse_poly("(x^2+y^2)^2+x^2-y^2-5");
  CHECK(partial_derivative(c, Var::x) == BivariatePoly(2) * parse_poly("x*(2*x^2+2*y^2+1)"));
  CHECK(partial_derivative(c, Var::y) == BivariatePoly(2) * parse_poly("y*(2*x^2+2*y^2-1)"));
  CHECK(partial_derivative(BivariatePoly(7), Var::y).is_zero());
}

TEST_CASE("homogeneous part") {
  const BivariatePoly p5p = parse_poly("x*(2*x^2+2*y^2+1)*((x^2+y^2)^2+x^2-y^2) - y*(2*x^2+2*y^2-1)");
  CHECK(homogeneous_part(p5p, 7) == parse_poly("2*x*(x^2+y^2)^3"));
  CHECK(homogeneous_part(p5p, 9).is_zero());
}

TEST_CASE("evaluate") {
  const BivariatePoly c3 = parse_poly("x^2+y^2-2*x-8");
  CHECK(std::fabs(c3.evaluate(0.5, std::sqrt(35.0) / 2.0)) < 1e-12);
  CHECK(BivariatePoly().evaluate(1.5, -2.0) == 0.0);
  CHECK(parse_poly("x^2+y^2+1").evaluate(0.0, 0.0) == 1.0);
  CHECK(c3.evaluate(make_rational(1, 2), make_rational(3)) == make_rational(1, 4));
}

TEST_CASE("parse") {
  const BivariatePoly p = parse_poly("x*(x^2+y^2-1)*(x^2+y^2-9)");
  CHECK(p.degree() == 5u);
  CHECK(p == BivariatePoly::var_x() * parse_poly("x^2+y^2-1") * parse_poly("x^2+y^2-9"));
  CHECK(parse_poly("0").is_zero());
  CHECK(parse_poly("x^4+y^4+1") == BivariatePoly::monomial(1, 4, 0) + BivariatePoly::monomial(1, 0, 4) + BivariatePoly(1));
  CHECK(parse_poly(" 3/4 * x - (-2) ") == BivariatePoly::monomial(make_rational(3, 4), 1, 0) + BivariatePoly(2));

  SUBCASE("errors carry offsets") {
    try {
      parse_poly("x + 2x");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.offset() == 5);
    }
    CHECK_THROWS_AS(parse_poly("(x+y"), ParseError);
    CHECK_THROWS_AS(parse_poly("x^"), ParseError);
    CHECK_THROWS_AS(parse_poly("x/0"), ParseError);
    CHECK_THROWS_AS(parse_poly("x^100000"), ParseError);
    CHECK_THROWS_AS(parse_poly(""), ParseError);
  }
}

TEST_CASE("printer") {
  CHECK(parse_poly("(x^2+y^2-1)*(x^2+y^2-9)").to_string() == "x^4 + 2*x^2*y^2 + y^4 - 10*x^2 - 10*y^2 + 9");
  CHECK(parse_poly("-x^2").to_string() == "-x^2");
  CHECK(BivariatePoly().to_string() == "0");
}

TEST_CASE("property: ring axioms on 1000 random triples") {
  std::mt19937_64 rng(20260101);
  for (int n = 0; n < 1000; ++n) {
    const auto a = testutil::random_poly(rng, 4, 5);
    const auto b = testutil::random_poly(rng, 4, 5);
    const auto c = testutil::random_poly(rng, 3, 4);
    REQUIRE(a + b == b + a);
    REQUIRE(a * b == b * a);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a * b == dense_product(a, b));
  }
}

TEST_CASE("property: homogeneous parts reconstruct") {
  std::mt19937_64 rng(7);
  for (int n = 0; n < 200; ++n) {
    const auto a = testutil::random_poly(rng, 7, 8);
    BivariatePoly sum;
    for (unsigned d = 0; d <= a.degree().value_or(0); ++d) sum += homogeneous_part(a, d);
    REQUIRE(sum == a);
  }
}

TEST_CASE("property: evaluation is multiplicative") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int n = 0; n < 300; ++n) {
    const auto a = testutil::random_poly(rng, 4, 5);
    const auto b = testutil::random_poly(rng, 4, 5);
    const double x = u(rng), y = u(rng);
    const double want = a.evaluate(x, y) * b.evaluate(x, y);
    const double scale = NumericPoly(a).abs_sum(x, y) * NumericPoly(b).abs_sum(x, y);
    REQUIRE(std::fabs((a * b).evaluate(x, y) - want) <= 1e-12 * std::max(1.0, scale));
  }
}

TEST_CASE("property: parse inverts print") {
  std::mt19937_64 rng(13);
  for (int n = 0; n < 500; ++n) {
    const auto a = testutil::random_poly(rng, 6, 6);
    REQUIRE(parse_poly(a.to_string()) == a);
  }
}

TEST_CASE("planar system") {
  CHECK_THROWS_AS(PlanarPolySystem(BivariatePoly(), BivariatePoly()), Error);
  const PlanarPolySystem s(parse_poly("x^3 - y"), parse_poly("x"));
  CHECK(s.degree() == 3);
  CHECK(s.p_part(3) == parse_poly("x^3"));
  CHECK(s.q_part(0).is_zero());
  const Vec2 f = s.field(2.0, 1.0);
  CHECK(f.x == 7.0);
  CHECK(f.y == 2.0);
}
