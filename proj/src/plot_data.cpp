#include <cstdio>
#include <fstream>

#include "nevpull/cli.hpp"
#include "nevpull/errors.hpp"
#include "nevpull/nevanlinna.hpp"
#include "nevpull/pullback.hpp"

namespace nevpull {

namespace {

std::string row(std::initializer_list<double> xs) {
  std::string s;
  char buf[40];
  for (double x : xs) {
    std::snprintf(buf, sizeof buf, "%.12g", x);
    if (!s.empty()) s += ',';
    s += buf;
  }
  return s + "\n";
}

std::vector<double> linspace(double a, double b, int n) {
  if (n < 2) throw DomainError("plot: need at least two points");
  std::vector<double> v(n);
  for (int k = 0; k < n; ++k) v[k] = a + (b - a) * k / (n - 1);
  return v;
}

WindowFamily family_of(const PlotParams& p) {
  if (p.family == "s") return WindowFamily::s_window(p.zeta);
  if (p.family == "g") return WindowFamily::g_window(p.arc);
  if (p.family == "radial") return WindowFamily::radial_family();
  if (p.family == "disk") return WindowFamily::disk_family();
  throw DomainError("plot: unknown family '" + p.family + "'");
}

}  // namespace

PlotKind parse_plot_kind(const std::string& s) {
  if (s == "level_curve") return PlotKind::level_curve;
  if (s == "measure_profile") return PlotKind::measure_profile;
  if (s == "counting_radial") return PlotKind::counting_radial;
  throw DomainError("unknown plot kind '" + s + "'");
}

std::string plot_data_csv(PlotKind kind, const PlotParams& p) {
  std::string out;
  switch (kind) {
    case PlotKind::level_curve: {
      const CircularArcCurve c = level_curve(p.arc, p.alpha);
      out = "s,x,y\n";
      for (double s : linspace(0.0, c.length, p.points)) {
        const cplx z = c.point(s);
        out += row({s, z.real(), z.imag()});
      }
      break;
    }
    case PlotKind::measure_profile: {
      const AnalyticSelfMap map = parse_map_spec(p.map_spec);
      const MeasureProfile prof = measure_profile(map, family_of(p), linspace(p.from, p.to, p.points));
      out = "u,mu,is_jump\n";
      for (std::size_t k = 0; k < prof.grid.size(); ++k)
        out += row({prof.grid[k], prof.values[k], prof.is_jump[k] ? 1.0 : 0.0});
      break;
    }
    case PlotKind::counting_radial: {
      const AnalyticSelfMap map = parse_map_spec(p.map_spec);
      const CountingFunction n(map);
      PlaneSingularities sing;
      sing.points.push_back(map.origin_image());
      out = "r,circle_average_N\n";
      for (double r : linspace(p.from, p.to, p.points)) {
        if (!(r > 0.0 && r < 1.0)) throw DomainError("plot: radii must lie in (0, 1)");
        PlaneSingularities s = sing;
        for (double k : map.kink_radii())
          if (std::abs(k - r) > 1e-12) s.kink_radii.push_back(k);
        QuadOptions o;
        o.abs_tol = 1e-11;
        o.initial_panels = 16;
        const double v = integrate_curve([&](cplx z) { return n(z); },
                                         CircularArcCurve::circle({0.0, 0.0}, r, 0.0, kTwoPi), o, s)
                             .value /
                         (kTwoPi * r);
        out += row({r, v});
      }
      break;
    }
  }
  return out;
}

void emit_plot_data(PlotKind kind, const PlotParams& params, const std::string& path) {
  const std::string csv = plot_data_csv(kind, params);
  std::ofstream f(path);
  if (!f) throw Error("cannot write " + path);
  f << csv;
  if (!f) throw Error("write failed for " + path);
}

}  // namespace nevpull
