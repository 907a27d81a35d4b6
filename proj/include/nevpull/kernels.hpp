#pragma once

// Data-parallel evaluation kernels.
//
// Every kernel exists twice: an OpenMP version and a plain serial loop kept as
// the reference. Both write results by index and reduce in index order, so
// they produce bit-identical output for any thread count.

#include <complex>
#include <exception>
#include <functional>
#include <span>
#include <vector>

#include "nevpull/selfmap.hpp"

namespace nevpull {

enum class Exec { serial, parallel };

namespace kernels {

using ScalarFn = std::function<double(double)>;
using PointFn = std::function<double(cplx)>;

namespace serial {
void map_scalar(const ScalarFn& f, std::span<const double> x, std::span<double> y);
void map_points(const PointFn& f, std::span<const cplx> z, std::span<double> y);
void sample_chart(const BoundaryChart& chart, std::span<const double> s, std::span<cplx> w);
}  // namespace serial

namespace parallel {
void map_scalar(const ScalarFn& f, std::span<const double> x, std::span<double> y);
void map_points(const PointFn& f, std::span<const cplx> z, std::span<double> y);
void sample_chart(const BoundaryChart& chart, std::span<const double> s, std::span<cplx> w);
}  // namespace parallel

inline void map_scalar(Exec e, const ScalarFn& f, std::span<const double> x, std::span<double> y) {
  e == Exec::parallel ? parallel::map_scalar(f, x, y) : serial::map_scalar(f, x, y);
}
inline void map_points(Exec e, const PointFn& f, std::span<const cplx> z, std::span<double> y) {
  e == Exec::parallel ? parallel::map_points(f, z, y) : serial::map_points(f, z, y);
}
inline void sample_chart(Exec e, const BoundaryChart& chart, std::span<const double> s, std::span<cplx> w) {
  e == Exec::parallel ? parallel::sample_chart(chart, s, w) : serial::sample_chart(chart, s, w);
}

/// True when called from inside an active OpenMP parallel region; nested
/// kernels then fall back to the serial path.
bool in_parallel_region();

/// Index-ordered sum (the deterministic reduction used everywhere).
double ordered_sum(std::span<const double> v);

}  // namespace kernels
}  // namespace nevpull
