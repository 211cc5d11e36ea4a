#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>

#include "poincare/catalog.hpp"
#include "poincare/kernels.hpp"

using namespace poincare;

namespace {

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

bool same(const Trajectory& a, const Trajectory& b) {
  if (a.termination != b.termination || a.samples.size() != b.samples.size()) return false;
  for (std::size_t i = 0; i < a.samples.size(); ++i) {
    const Sample &p = a.samples[i], &q = b.samples[i];
    if (!same_bits(p.t, q.t) || !same_bits(p.x, q.x) || !same_bits(p.y, q.y)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("sample_uniform: serial and OpenMP agree bit for bit") {
  const TrigPoly t(parse_poly("x^7 - 3*x^2*y + 1/7*y^5 + 2"));
  const auto a = kernels::serial::sample_uniform(t, 100'003);
  const auto b = kernels::omp::sample_uniform(t, 100'003);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) REQUIRE(same_bits(a[i], b[i]));
  CHECK(kernels::sample_uniform(t, 8, kernels::Backend::serial) == kernels::sample_uniform(t, 8, kernels::Backend::openmp));
}

TEST_CASE("newton_batch: serial and OpenMP agree bit for bit") {
  const PlanarPolySystem s = get_example(ExampleName::R5, make_rational(-1, 8));
  const NewtonField f(s);
  std::vector<Vec2> seeds;
  for (int i = 0; i < 40; ++i)
    for (int j = 0; j < 40; ++j) seeds.push_back({-3.0 + 0.15 * i, -3.0 + 0.15 * j});
  const auto a = kernels::serial::newton_batch(f, seeds, {});
  const auto b = kernels::omp::newton_batch(f, seeds, {});
  REQUIRE(a.size() == seeds.size());
  REQUIRE(b.size() == seeds.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    REQUIRE(same_bits(a[i].point.x, b[i].point.x));
    REQUIRE(same_bits(a[i].point.y, b[i].point.y));
    REQUIRE(a[i].steps == b[i].steps);
    REQUIRE(a[i].converged == b[i].converged);
  }
}

TEST_CASE("integrate_batch: serial and OpenMP agree bit for bit") {
  PortraitSpec spec;
  spec.t_span = 5.0;
  const auto seeds = portrait_seeds(spec);
  for (ExampleName e : {ExampleName::P3, ExampleName::P4, ExampleName::R4}) {
    const PlanarPolySystem s = get_example(e);
    const auto a = kernels::serial::integrate_batch(s, seeds, spec);
    const auto b = kernels::omp::integrate_batch(s, seeds, spec);
    REQUIRE(a.size() == seeds.size());
    REQUIRE(b.size() == seeds.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      REQUIRE(same(a[i].forward, b[i].forward));
      REQUIRE(same(a[i].backward, b[i].backward));
    }
  }
}

TEST_CASE("default backend") {
  const kernels::Backend before = kernels::default_backend();
  kernels::set_default_backend(kernels::Backend::serial);
  CHECK(kernels::default_backend() == kernels::Backend::serial);
  kernels::set_default_backend(before);
}
