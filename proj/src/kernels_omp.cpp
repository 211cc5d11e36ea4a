#include <cstdlib>
#include <numbers>

#include "poincare/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace poincare::kernels {
namespace {

#ifdef _OPENMP
Backend g_backend = Backend::openmp;
#else
Backend g_backend = Backend::serial;
#endif

}  // namespace

Backend default_backend() { return g_backend; }
void set_default_backend(Backend b) { g_backend = b; }

void set_thread_cap(int n) {
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

void apply_thread_env() {
  if (const char* v = std::getenv("POINCARE_THREADS")) set_thread_cap(std::atoi(v));
}

std::vector<double> sample_uniform(const TrigPoly& t, std::size_t n, Backend b) {
  return b == Backend::openmp ? omp::sample_uniform(t, n) : serial::sample_uniform(t, n);
}

std::vector<NewtonResult> newton_batch(const NewtonField& f, std::span<const Vec2> seeds, const NewtonOptions& opts,
                                       Backend b) {
  return b == Backend::openmp ? omp::newton_batch(f, seeds, opts) : serial::newton_batch(f, seeds, opts);
}

std::vector<TrajectoryPair> integrate_batch(const PlanarPolySystem& sys, std::span<const Vec2> seeds,
                                            const PortraitSpec& spec, Backend b) {
  return b == Backend::openmp ? omp::integrate_batch(sys, seeds, spec) : serial::integrate_batch(sys, seeds, spec);
}

namespace omp {

std::vector<double> sample_uniform(const TrigPoly& t, std::size_t n) {
  std::vector<double> out(n);
  const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(static) if (n >= 4096)
  for (long long i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = t(step * static_cast<double>(i));
  return out;
}

std::vector<NewtonResult> newton_batch(const NewtonField& f, std::span<const Vec2> seeds, const NewtonOptions& opts) {
  std::vector<NewtonResult> out(seeds.size());
  const auto count = static_cast<long long>(seeds.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (long long i = 0; i < count; ++i) {
    const auto k = static_cast<std::size_t>(i);
    out[k] = newton_solve(f, seeds[k], opts);
  }
  return out;
}

std::vector<TrajectoryPair> integrate_batch(const PlanarPolySystem& sys, std::span<const Vec2> seeds,
                                            const PortraitSpec& spec) {
  std::vector<TrajectoryPair> out(seeds.size());
  const auto count = static_cast<long long>(seeds.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < count; ++i) {
    const auto k = static_cast<std::size_t>(i);
    out[k] = integrate_both(sys, seeds[k], spec);
  }
  return out;
}

}  // namespace omp
}  // namespace poincare::kernels
