#include <numbers>

#include "poincare/kernels.hpp"

namespace poincare::kernels::serial {

std::vector<double> sample_uniform(const TrigPoly& t, std::size_t n) {
  std::vector<double> out(n);
  const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = t(step * static_cast<double>(i));
  return out;
}

std::vector<NewtonResult> newton_batch(const NewtonField& f, std::span<const Vec2> seeds, const NewtonOptions& opts) {
  std::vector<NewtonResult> out(seeds.size());
  for (std::size_t i = 0; i < seeds.size(); ++i) out[i] = newton_solve(f, seeds[i], opts);
  return out;
}

std::vector<TrajectoryPair> integrate_batch(const PlanarPolySystem& sys, std::span<const Vec2> seeds,
                                            const PortraitSpec& spec) {
  std::vector<TrajectoryPair> out(seeds.size());
  for (std::size_t i = 0; i < seeds.size(); ++i) out[i] = integrate_both(sys, seeds[i], spec);
  return out;
}

}  // namespace poincare::kernels::serial
