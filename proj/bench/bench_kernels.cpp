// Serial reference kernels against their OpenMP counterparts.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <vector>

#include "nevpull/kernels.hpp"
#include "nevpull/nevanlinna.hpp"
#include "nevpull/quad.hpp"

using namespace nevpull;

namespace {

double time_best(const std::function<void()>& f, int reps = 5) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

void report(const char* name, double serial, double parallel, bool identical) {
  std::printf("%-34s serial %9.4f s  parallel %9.4f s  speedup %5.2fx  %s\n", name, serial, parallel,
              serial / parallel, identical ? "identical" : "MISMATCH");
}

}  // namespace

int main() {
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
  const AnalyticSelfMap b3 = AnalyticSelfMap::blaschke({0.0, cplx{0.0, 0.3}, -0.4});
  const AnalyticSelfMap sing = AnalyticSelfMap::atomic_singular(1.0);

  {
    const BoundaryChart chart = sing.boundary_chart();
    const std::size_t n = std::size_t{1} << 20;
    std::vector<double> s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = kTwoPi * i / n;
    std::vector<cplx> ws(n), wp(n);
    const double ts = time_best([&] { kernels::serial::sample_chart(chart, s, ws); });
    const double tp = time_best([&] { kernels::parallel::sample_chart(chart, s, wp); });
    report("sample_chart (2^20, singular)", ts, tp, ws == wp);
  }
  {
    const CountingFunction nf(b3);
    std::vector<cplx> pts;
    for (int i = 0; i < 200; ++i)
      for (int j = 0; j < 200; ++j) pts.push_back(std::polar(0.02 + 0.96 * i / 200.0, kTwoPi * j / 200.0));
    std::vector<double> ys(pts.size()), yp(pts.size());
    auto f = [&](cplx z) { return nf(z); };
    const double ts = time_best([&] { kernels::serial::map_points(f, pts, ys); }, 3);
    const double tp = time_best([&] { kernels::parallel::map_points(f, pts, yp); }, 3);
    report("counting on 40000 points (deg 3)", ts, tp, ys == yp);
  }
  {
    const CountingFunction nf(b3);
    Quad2DOptions o;
    o.sing.points.push_back(b3.origin_image());
    QuadResult rs, rp;
    o.outer.exec = Exec::serial;
    const double ts = time_best([&] { rs = integrate_window_2d([&](cplx z) { return nf(z); }, {-1.0, 0.5}, o); }, 2);
    o.outer.exec = Exec::parallel;
    const double tp = time_best([&] { rp = integrate_window_2d([&](cplx z) { return nf(z); }, {-1.0, 0.5}, o); }, 2);
    report("window 2-D quadrature (deg 3)", ts, tp, rs.value == rp.value);
  }
  return 0;
}
