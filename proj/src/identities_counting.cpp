// Identities between N_phi and boundary averages / pull-back profiles.

#include <algorithm>
#include <cmath>

#include "identities_internal.hpp"
#include "nevpull/errors.hpp"

namespace nevpull {

using detail::fmt;

namespace {

QuadOptions boundary_options() {
  QuadOptions o;
  o.abs_tol = 1e-13;
  o.rel_tol = 1e-12;
  o.initial_panels = 32;
  return o;
}

// integral of g(phi*) d sigma through the boundary chart
double boundary_average(const AnalyticSelfMap& map, const PlaneFn& g) {
  const BoundaryChart chart = map.boundary_chart();
  QuadOptions o = boundary_options();
  if (chart.kind() == BoundaryChart::Kind::wrapped_cauchy) o.breakpoints.push_back(kPi);
  return integrate_interval([&](double s) { return g(chart.value(s)) * chart.density(s); }, 0.0, kTwoPi, o).value;
}

// mean of g(phi(r e^{i theta})) over theta
double radial_average(const AnalyticSelfMap& map, const PlaneFn& g, double r) {
  QuadOptions o = boundary_options();
  o.max_panels = 4'000'000;
  double lo = 0.0;
  if (auto atom = map.singular_angle()) {
    // start the period at the atom so both ends cascade toward it
    lo = *atom;
    o.singular_lo = o.singular_hi = true;
  }
  const QuadResult q = integrate_interval([&](double t) { return g(map.evaluate(std::polar(r, t))); }, lo,
                                          lo + kTwoPi, o);
  return q.value / kTwoPi;
}

struct Limit {
  double value;
  double order;
  std::vector<double> samples;
};

// r -> 1 limit from radii 1 - 1e-5, 1 - 1e-6, 1 - 1e-7 with Richardson
// extrapolation at the observed order
Limit radial_limit(const AnalyticSelfMap& map, const PlaneFn& g) {
  Limit out{0.0, 0.0, {}};
  for (double d : {1e-5, 1e-6, 1e-7}) out.samples.push_back(radial_average(map, g, 1.0 - d));
  const double d1 = out.samples[1] - out.samples[0], d2 = out.samples[2] - out.samples[1];
  if (std::abs(d2) < 1e-14 || std::abs(d1) < 1e-14) {
    out.value = out.samples[2];
    return out;
  }
  const double p = std::clamp(-std::log10(std::abs(d2 / d1)), 0.25, 2.0);
  const double q = std::pow(10.0, -p);
  out.order = p;
  out.value = out.samples[2] + d2 * q / (1.0 - q);
  return out;
}

double poly_laplacian_integral(const AnalyticSelfMap& map, const CountingFunction& n, const Polynomial& f) {
  // 2 * integral |f'|^2 N dv
  const QuadResult r = integrate_disk_2d([&](cplx z) { return std::norm(f.derivative(z)) * n(z); }, 1.0,
                                         detail::plane_options(map));
  return 2.0 * r.value;
}

void add_map(CheckResult& r, const AnalyticSelfMap& map) { r.parameters.emplace_back("map", map.render()); }

}  // namespace

CheckResult check_littlewood_paley(const AnalyticSelfMap& map, const Polynomial& f, double tol) {
  detail::Stopwatch sw;
  CheckResult r;
  r.name = "check_littlewood_paley";
  add_map(r, map);
  r.parameters.emplace_back("f", f.render());
  const double lhs = boundary_average(map, [&](cplx w) { return std::norm(f(w)); });
  const CountingFunction n(map);
  const double rhs = std::norm(f(map.origin_image())) + poly_laplacian_integral(map, n, f);
  r.lhs_provenance = "boundary-chart quadrature of |f(phi*)|^2";
  r.rhs_provenance = "polar 2-D quadrature of |f'|^2 N (" + detail::counting_route(map) + ")";
  detail::finish_equality(r, lhs, rhs, tol);
  r.seconds = sw.seconds();
  return r;
}

CheckResult check_stanton(const AnalyticSelfMap& map, const stanton::Function& g, double tol) {
  detail::Stopwatch sw;
  CheckResult r;
  r.name = "check_stanton";
  add_map(r, map);
  r.parameters.emplace_back("G", stanton::describe(g));
  const CountingFunction n(map);
  const cplx p0 = map.origin_image();

  PlaneFn gfun;
  double rhs = 0.0;
  if (auto* c = std::get_if<stanton::Constant>(&g)) {
    gfun = [v = c->value](cplx) { return v; };
    rhs = c->value;
    r.rhs_provenance = "G(phi(0)), Laplacian zero";
  } else if (std::holds_alternative<stanton::ModulusSquared>(g)) {
    gfun = [](cplx w) { return std::norm(w); };
    rhs = std::norm(p0) +
          2.0 * integrate_disk_2d([&](cplx z) { return n(z); }, 1.0, detail::plane_options(map)).value;
    r.rhs_provenance = "polar 2-D quadrature of N (" + detail::counting_route(map) + ")";
  } else if (auto* ps = std::get_if<stanton::PolySquared>(&g)) {
    const Polynomial f = ps->f;
    gfun = [f](cplx w) { return std::norm(f(w)); };
    rhs = std::norm(f(p0)) + poly_laplacian_integral(map, n, f);
    r.rhs_provenance = "polar 2-D quadrature of |f'|^2 N (" + detail::counting_route(map) + ")";
  } else {
    const auto lc = std::get<stanton::LogClamp>(g);
    detail::require(lc.t1 > 0.0 && lc.t1 < lc.t2 && lc.t2 < 1.0, "check_stanton: need 0 < t1 < t2 < 1");
    const double l1 = std::log(lc.t1), l2 = std::log(lc.t2);
    gfun = [l1, l2](cplx w) {
      const double a = std::abs(w);
      return a > 0.0 ? std::clamp(std::log(a), l1, l2) : l1;
    };
    // the Laplacian is (1/t1) ds on |z| = t1 minus (1/t2) ds on |z| = t2
    rhs = gfun(p0) + detail::circle_average(map, n, lc.t1) - detail::circle_average(map, n, lc.t2);
    r.rhs_provenance = "circle quadrature of N at t1 and t2 (" + detail::counting_route(map) + ")";
  }

  const Limit lim = radial_limit(map, gfun);
  r.lhs_provenance = "radial averages of G(phi(r zeta)) at three radii, Richardson extrapolated";
  r.notes.push_back("radial samples " + fmt(lim.samples[0]) + ", " + fmt(lim.samples[1]) + ", " +
                    fmt(lim.samples[2]) + (lim.order > 0.0 ? "; observed order " + fmt(lim.order) : ""));
  detail::finish_equality(r, lim.value, rhs, tol);
  r.seconds = sw.seconds();
  return r;
}

CheckResult check_lft_level(const AnalyticSelfMap& map, const LinearFractional& f, double t, double tol) {
  detail::Stopwatch sw;
  f.validate();
  detail::require(t > 0.0, "check_lft_level: t must be positive");
  CheckResult r;
  r.name = "check_lft_level";
  add_map(r, map);
  r.parameters.emplace_back("f", "(" + fmt(f.a) + " z + " + fmt(f.b) + ")/(" + fmt(f.c) + " z + " + fmt(f.d) + ")");
  r.parameters.emplace_back("t", fmt(t));

  const CircularArcCurve level = lft_level_set(f, t);
  detail::require(!level.empty(), "check_lft_level: the level set misses the disk");
  const double f0 = std::abs(f(map.origin_image()));
  detail::require(std::abs(f0 - t) > 1e-12, "check_lft_level: |f(phi(0))| = t, the case split is degenerate");
  const bool case_i = f0 > t;
  r.parameters.emplace_back("case", case_i ? "i" : "ii");

  const CountingFunction n(map);
  QuadOptions o = detail::curve_options();
  o.initial_panels = 16;
  const QuadResult lq = integrate_curve([&](cplx z) { return n(z) / std::norm(f.c * z + f.d); }, level, o,
                                        detail::counting_singularities(map));
  const double lhs = lq.value / (kTwoPi * t);

  const double top = f.sup_on_disk();
  double rhs = case_i ? -std::log(f0 / t) : 0.0;
  if (top > t) {
    const ProfileFunction prof = profile_function(detail::make_sampler(map), WindowFamily::lft_family(f));
    rhs += integrate_profile([](double u) { return 1.0 / u; }, prof, t, top, detail::profile_options()).value;
  }
  r.lhs_provenance = "line quadrature of N/|cz+d|^2 along the level circle (" + detail::counting_route(map) + ")";
  r.rhs_provenance = "profile quadrature of mu(|f(phi*)| >= u)/u";
  detail::finish_equality(r, lhs, rhs, tol);
  r.seconds = sw.seconds();
  return r;
}

CheckResult check_circle_average(const AnalyticSelfMap& map, double radius, double tol) {
  detail::Stopwatch sw;
  detail::require(radius > 0.0 && radius < 1.0, "check_circle_average: r must lie in (0, 1)");
  const double p = std::abs(map.origin_image());
  detail::require(std::abs(p - radius) > 1e-12, "check_circle_average: r = |phi(0)|");
  CheckResult r;
  r.name = "check_circle_average";
  add_map(r, map);
  r.parameters.emplace_back("r", fmt(radius));

  const double lhs = detail::circle_average(map, CountingFunction(map), radius);
  const ProfileFunction prof = profile_function(detail::make_sampler(map), WindowFamily::radial_family());
  double rhs = p > radius ? -std::log(p / radius) : 0.0;
  rhs += integrate_profile([](double u) { return 1.0 / u; }, prof, radius, 1.0, detail::profile_options()).value;
  r.lhs_provenance = "circle quadrature of N (" + detail::counting_route(map) + ")";
  r.rhs_provenance = "log+ term and profile quadrature of mu(|phi*| >= u)/u";
  detail::finish_equality(r, lhs, rhs, tol);
  r.seconds = sw.seconds();
  return r;
}

CheckResult check_disk_average(const AnalyticSelfMap& map, double radius, double tol) {
  detail::Stopwatch sw;
  const double p = std::abs(map.origin_image());
  detail::require(radius > 0.0 && radius < p, "check_disk_average: need 0 < r < |phi(0)|");
  CheckResult r;
  r.name = "check_disk_average";
  add_map(r, map);
  r.parameters.emplace_back("r", fmt(radius));

  const CountingFunction n(map);
  const double lhs = integrate_disk_2d([&](cplx z) { return n(z); }, radius, detail::plane_options(map)).value;
  const double nbar0 = counting_integral(map, cplx{0.0, 0.0}, 1e-12).value;
  const ProfileFunction prof = profile_function(detail::make_sampler(map), WindowFamily::disk_family());
  const double r2 = radius * radius;
  const double tail =
      integrate_profile([r2](double u) { return (r2 - u * u) / u; }, prof, 0.0, radius, detail::profile_options())
          .value;
  r.lhs_provenance = "polar 2-D quadrature of N over D(0, r) (" + detail::counting_route(map) + ")";
  r.rhs_provenance = "boundary integral for N(0) plus profile quadrature of mu(D(0, u))";
  detail::finish_equality(r, lhs, r2 * nbar0 + tail, tol);
  r.seconds = sw.seconds();
  return r;
}

CheckResult check_window_identity(const AnalyticSelfMap& map, cplx zeta, double h, double tol) {
  detail::Stopwatch sw;
  detail::require(std::abs(std::abs(zeta) - 1.0) < 1e-12, "check_window_identity: |zeta| must be 1");
  detail::require(h > 0.0 && h <= 2.0, "check_window_identity: h must lie in (0, 2]");
  detail::require(std::abs(map.origin_image() - zeta) > h + 1e-12,
                  "check_window_identity: phi(0) lies in the closed window");
  CheckResult r;
  r.name = "check_window_identity";
  add_map(r, map);
  r.parameters.emplace_back("zeta", fmt(zeta));
  r.parameters.emplace_back("h", fmt(h));

  const CountingFunction n(map);
  const double lhs = integrate_window_2d([&](cplx z) { return n(z); }, {zeta, h}, detail::plane_options(map)).value;
  const ProfileFunction prof = profile_function(detail::make_sampler(map), WindowFamily::s_window(zeta));
  const double h2 = h * h;
  const double rhs =
      integrate_profile([h2](double u) { return (h2 - u * u) / u; }, prof, 0.0, h, detail::profile_options()).value;
  r.lhs_provenance = "polar 2-D quadrature of N over the window (" + detail::counting_route(map) + ")";
  r.rhs_provenance = "profile quadrature of (h^2 - u^2)/u mu(S(zeta, u))";
  detail::finish_equality(r, lhs, rhs, tol);
  r.seconds = sw.seconds();
  return r;
}

CheckResult check_window_inequality(const AnalyticSelfMap& map, cplx zeta, double h) {
  detail::Stopwatch sw;
  detail::require(std::abs(std::abs(zeta) - 1.0) < 1e-12, "check_window_inequality: |zeta| must be 1");
  detail::require(h > 0.0 && h <= 1.0, "check_window_inequality: h must lie in (0, 1]");
  detail::require(std::abs(map.origin_image() - zeta) > 2.0 * h + 1e-12,
                  "check_window_inequality: phi(0) lies in the closed doubled window");
  CheckResult r;
  r.name = "check_window_inequality";
  add_map(r, map);
  r.parameters.emplace_back("zeta", fmt(zeta));
  r.parameters.emplace_back("h", fmt(h));

  const double lhs = window_measure_S(map, zeta, h);
  const CountingFunction n(map);
  const double area =
      integrate_window_2d([&](cplx z) { return n(z); }, {zeta, 2.0 * h}, detail::plane_options(map)).value;
  const double rhs = 2.0 / window_area(2.0 * h) * area;
  r.lhs_provenance = "pull-back measure of S(zeta, h) from boundary samples";
  r.rhs_provenance = "polar 2-D quadrature of N over S(zeta, 2h) (" + detail::counting_route(map) + ")";
  // strict inequality, accepted down to a -1e-9 margin
  detail::finish_inequality(r, lhs, rhs, 1e-9, true);
  if (r.status == CheckResult::Status::vacuous) r.notes.push_back("both sides vanish");
  r.seconds = sw.seconds();
  return r;
}

}  // namespace nevpull
