#pragma once

// Data-parallel inner loops. Each kernel has a serial reference and an
// OpenMP version; both must produce identical output for the same input.

#include <span>
#include <vector>

#include "poincare/local.hpp"
#include "poincare/portrait.hpp"
#include "poincare/trig.hpp"

namespace poincare::kernels {

enum class Backend { serial, openmp };

/// Backend used by the library entry points. openmp when compiled with
/// OpenMP support, serial otherwise.
Backend default_backend();
void set_default_backend(Backend b);

/// Caps OpenMP threads (no-op without OpenMP). n <= 0 leaves the runtime default.
void set_thread_cap(int n);
/// Reads POINCARE_THREADS and applies it via set_thread_cap.
void apply_thread_env();

/// t(2π i / n) for i = 0..n-1.
std::vector<double> sample_uniform(const TrigPoly& t, std::size_t n, Backend b);
inline std::vector<double> sample_uniform(const TrigPoly& t, std::size_t n) { return sample_uniform(t, n, default_backend()); }

std::vector<NewtonResult> newton_batch(const NewtonField& f, std::span<const Vec2> seeds, const NewtonOptions& opts, Backend b);

std::vector<TrajectoryPair> integrate_batch(const PlanarPolySystem& sys, std::span<const Vec2> seeds, const PortraitSpec& spec,
                                            Backend b);

namespace serial {
std::vector<double> sample_uniform(const TrigPoly& t, std::size_t n);
std::vector<NewtonResult> newton_batch(const NewtonField& f, std::span<const Vec2> seeds, const NewtonOptions& opts);
std::vector<TrajectoryPair> integrate_batch(const PlanarPolySystem& sys, std::span<const Vec2> seeds, const PortraitSpec& spec);
}  // namespace serial

namespace omp {
std::vector<double> sample_uniform(const TrigPoly& t, std::size_t n);
std::vector<NewtonResult> newton_batch(const NewtonField& f, std::span<const Vec2> seeds, const NewtonOptions& opts);
std::vector<TrajectoryPair> integrate_batch(const PlanarPolySystem& sys, std::span<const Vec2> seeds, const PortraitSpec& spec);
}  // namespace omp

}  // namespace poincare::kernels
