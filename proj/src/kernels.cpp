#include "nevpull/kernels.hpp"

#include <omp.h>

#include <cstddef>

namespace nevpull::kernels {

namespace {

// Runs body(i) for i in [0, n) under OpenMP, rethrowing the exception of the
// lowest failing index so error reporting does not depend on scheduling.
template <class Body>
void parallel_for(std::size_t n, Body&& body) {
  if (n == 0) return;
  if (in_parallel_region() || n < 64) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(n);
  bool any_error = false;
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 16) reduction(|| : any_error)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
      any_error = true;
    }
  }
  if (any_error)
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
}

}  // namespace

bool in_parallel_region() { return omp_in_parallel() != 0; }

double ordered_sum(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s;
}

namespace serial {

void map_scalar(const ScalarFn& f, std::span<const double> x, std::span<double> y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = f(x[i]);
}

void map_points(const PointFn& f, std::span<const cplx> z, std::span<double> y) {
  for (std::size_t i = 0; i < z.size(); ++i) y[i] = f(z[i]);
}

void sample_chart(const BoundaryChart& chart, std::span<const double> s, std::span<cplx> w) {
  for (std::size_t i = 0; i < s.size(); ++i) w[i] = chart.value(s[i]);
}

}  // namespace serial

namespace parallel {

void map_scalar(const ScalarFn& f, std::span<const double> x, std::span<double> y) {
  parallel_for(x.size(), [&](std::size_t i) { y[i] = f(x[i]); });
}

void map_points(const PointFn& f, std::span<const cplx> z, std::span<double> y) {
  parallel_for(z.size(), [&](std::size_t i) { y[i] = f(z[i]); });
}

void sample_chart(const BoundaryChart& chart, std::span<const double> s, std::span<cplx> w) {
  parallel_for(s.size(), [&](std::size_t i) { w[i] = chart.value(s[i]); });
}

}  // namespace parallel

}  // namespace nevpull::kernels
