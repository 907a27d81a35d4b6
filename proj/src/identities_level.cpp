// Checks built on the level curves of harmonic measure, and the inequalities
// derived from the window identity.

#include <algorithm>
#include <cmath>

#include "identities_internal.hpp"
#include "nevpull/errors.hpp"

namespace nevpull {

using detail::fmt;

namespace {

std::string render_arc(const BoundaryArc& arc) {
  return "center " + fmt(arc.center_angle) + ", half length " + fmt(arc.half_length);
}

// |d chi / dz| = |grad chi| / 2, gradient by fourth-order central differences
double fd_gradient_modulus(const BoundaryArc& arc, cplx z) {
  constexpr double h = 1e-5;
  auto d = [&](cplx e) {
    auto f = [&](double k) { return harmonic_measure(arc, z + k * h * e); };
    return (-f(2.0) + 8.0 * f(1.0) - 8.0 * f(-1.0) + f(-2.0)) / (12.0 * h);
  };
  return 0.5 * std::hypot(d({1.0, 0.0}), d({0.0, 1.0}));
}

double coarea_g(CoareaFunction g, cplx z) {
  switch (g) {
    case CoareaFunction::one:
      return 1.0;
    case CoareaFunction::half_disk_indicator:
      return std::abs(z) <= 0.5 ? 1.0 : 0.0;
    case CoareaFunction::one_minus_r2:
      return 1.0 - std::norm(z);
  }
  return 0.0;
}

}  // namespace

CheckResult check_gradient_lemma(const BoundaryArc& arc, double alpha, int n_points, double tol) {
  detail::Stopwatch sw;
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("check_gradient_lemma: alpha must lie in (0, 1)");
  if (n_points < 1) throw DomainError("check_gradient_lemma: need at least one point");
  CheckResult r;
  r.name = "check_gradient_lemma";
  r.parameters.emplace_back("arc", render_arc(arc));
  r.parameters.emplace_back("alpha", fmt(alpha));
  r.parameters.emplace_back("points", std::to_string(n_points));

  const CircularArcCurve curve = level_curve(arc, alpha);
  double worst = 0.0;
  cplx worst_z{0.0, 0.0};
  for (int k = 0; k < n_points; ++k) {
    const cplx z = curve.point(curve.length * (k + 0.5) / n_points);
    const double formula = std::sin(kPi * alpha) / (kPi * (1.0 - std::norm(z)));
    const double dev = std::abs(fd_gradient_modulus(arc, z) - formula);
    if (dev >= worst) worst = dev, worst_z = z;
  }
  r.lhs_provenance = "finite-difference gradient of the closed-form harmonic measure";
  r.rhs_provenance = "sin(pi alpha)/(pi (1 - |z|^2)) on the level curve";
  r.notes.push_back("lhs is the largest deviation between the two, attained at " + fmt(worst_z));
  detail::finish_inequality(r, worst, tol, 0.0, false);
  r.seconds = sw.seconds();
  return r;
}

CheckResult check_coarea(CoareaFunction g, const BoundaryArc& arc, double tol) {
  detail::Stopwatch sw;
  CheckResult r;
  r.name = "check_coarea";
  r.parameters.emplace_back("g", to_string(g));
  r.parameters.emplace_back("arc", render_arc(arc));

  Quad2DOptions o2;
  if (g == CoareaFunction::half_disk_indicator) o2.sing.kink_radii.push_back(0.5);
  const double lhs = integrate_disk_2d([g](cplx z) { return coarea_g(g, z); }, 1.0, o2).value;

  PlaneSingularities sing;
  if (g == CoareaFunction::half_disk_indicator) sing.kink_radii.push_back(0.5);
  QuadOptions outer;
  outer.abs_tol = 1e-11;
  outer.rel_tol = 1e-11;
  outer.singular_lo = outer.singular_hi = true;
  outer.initial_panels = 4;
  QuadOptions inner = detail::curve_options();
  inner.exec = Exec::serial;
  const double rhs = integrate_interval(
                         [&](double alpha) {
                           const CircularArcCurve c = level_curve(arc, alpha);
                           const double s = integrate_curve(
                                                [&](cplx z) { return coarea_g(g, z) * (1.0 - std::norm(z)); },
                                                c, inner, sing)
                                                .value;
                           return s / (2.0 * std::sin(kPi * alpha));
                         },
                         0.0, 1.0, outer)
                         .value;
  r.lhs_provenance = "polar 2-D quadrature over the disk";
  r.rhs_provenance = "level-curve line integrals nested in a quadrature over alpha";
  detail::finish_equality(r, lhs, rhs, tol);
  r.seconds = sw.seconds();
  return r;
}

CheckResult check_level_measure_identity(const AnalyticSelfMap& map, const BoundaryArc& arc, double alpha,
                                         double tol) {
  detail::Stopwatch sw;
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("check_level_measure_identity: alpha must lie in (0, 1)");
  const double chi0 = harmonic_measure(arc, map.origin_image());
  // alpha = chi(phi(0)) is admitted: the level curve then passes through phi(0),
  // where N has an integrable logarithmic singularity
  detail::require(alpha >= chi0 - 1e-12, "check_level_measure_identity: alpha < chi_F(phi(0)) = " + fmt(chi0));
  CheckResult r;
  r.name = "check_level_measure_identity";
  r.parameters.emplace_back("map", map.render());
  r.parameters.emplace_back("arc", render_arc(arc));
  r.parameters.emplace_back("alpha", fmt(alpha));

  const CountingFunction n(map);
  const double lhs = detail::level_curve_integral(map, n, arc, alpha).value;
  const ProfileFunction prof = profile_function(detail::make_sampler(map), WindowFamily::g_window(arc));
  const double integral =
      integrate_profile([](double) { return 1.0; }, prof, alpha, 1.0, detail::profile_options()).value;
  const double rhs = kPi * kPi / std::sin(kPi * alpha) * integral;
  r.lhs_provenance = "line quadrature of N/(1 - |z|^2) along the level curve (" + detail::counting_route(map) + ")";
  r.rhs_provenance = "profile quadrature of mu(G_F(u)) over [alpha, 1]";
  if (std::abs(alpha - chi0) <= 1e-12) r.notes.push_back("alpha equals chi_F(phi(0))");
  detail::finish_equality(r, lhs, rhs, tol);
  r.seconds = sw.seconds();
  return r;
}

CheckResult check_average_ratio_bound(const AnalyticSelfMap& map, cplx zeta, double h) {
  detail::Stopwatch sw;
  detail::require(std::abs(std::abs(zeta) - 1.0) < 1e-12, "check_average_ratio_bound: |zeta| must be 1");
  detail::require(h > 0.0 && h < 2.0, "check_average_ratio_bound: h must lie in (0, 2)");
  detail::require(std::abs(map.origin_image() - zeta) > h + 1e-12,
                  "check_average_ratio_bound: phi(0) lies in the closed window");
  CheckResult r;
  r.name = "check_average_ratio_bound";
  r.parameters.emplace_back("map", map.render());
  r.parameters.emplace_back("zeta", fmt(zeta));
  r.parameters.emplace_back("h", fmt(h));

  const CountingFunction n(map);
  const double avg = integrate_window_2d(
                         [&](cplx z) {
                           const double l = -std::log(std::abs(z));
                           return l > 0.0 ? n(z) / l : 0.0;
                         },
                         {zeta, h}, detail::plane_options(map))
                         .value /
                     window_area(h);
  const ProfileFunction prof = profile_function(detail::make_sampler(map), WindowFamily::s_window(zeta));
  const double mu_int = integrate_profile([](double) { return 1.0; }, prof, 0.0, h, detail::profile_options()).value;
  const double ch = average_ratio_constant(h);
  r.lhs_provenance = "window average of N/(-log|z|) by polar 2-D quadrature over the profile ratio";
  r.rhs_provenance = "constant c_h from the factor chain of the window bound";
  r.notes.push_back("window average " + fmt(avg) + ", integrated measure " + fmt(mu_int));
  if (mu_int <= 1e-15) {
    r.lhs = 0.0;
    r.rhs = ch;
    r.relation = CheckResult::Relation::at_most;
    r.status = CheckResult::Status::vacuous;
    r.notes.push_back(avg > 1e-12 ? "measure side vanishes while the window average does not"
                                  : "both sides vanish");
  } else {
    const double ratio = avg / (mu_int / detail::window_sigma_integral(h));
    detail::finish_inequality(r, ratio, ch, 0.0, false);
  }
  r.seconds = sw.seconds();
  return r;
}

CheckResult check_sup_bound(const AnalyticSelfMap& map, cplx zeta, double h) {
  detail::Stopwatch sw;
  detail::require(std::abs(std::abs(zeta) - 1.0) < 1e-12, "check_sup_bound: |zeta| must be 1");
  detail::require(h > 0.0 && h < 1.0, "check_sup_bound: h must lie in (0, 1)");
  detail::require(std::abs(map.origin_image() - zeta) > 2.0 * h + 1e-12,
                  "check_sup_bound: phi(0) lies in the closed doubled window");
  CheckResult r;
  r.name = "check_sup_bound";
  r.parameters.emplace_back("map", map.render());
  r.parameters.emplace_back("zeta", fmt(zeta));
  r.parameters.emplace_back("h", fmt(h));

  // triangular lattice over the window, refined until it holds 500 points
  std::vector<cplx> pts;
  for (int m = 16;; m *= 2) {
    pts.clear();
    const double step = h / m;
    const double dy = step * std::sqrt(3.0) / 2.0;
    for (int j = -2 * m; j <= 2 * m; ++j)
      for (int i = -2 * m; i <= 2 * m; ++i) {
        const cplx z = zeta + cplx{(i + 0.5 * (j & 1)) * step, j * dy};
        if (std::abs(z - zeta) < h && std::abs(z) < 1.0) pts.push_back(z);
      }
    if (pts.size() >= 500) break;
  }
  pts.push_back((1.0 - 0.5 * h) * zeta);
  const CountingFunction n(map);
  std::vector<double> vals(pts.size());
  kernels::map_points(Exec::parallel, [&](cplx z) { return n(z); }, pts, vals);
  const double sup = *std::max_element(vals.begin(), vals.end());

  const double ch = average_ratio_constant(2.0 * h);
  const double mu = window_measure_S(map, zeta, 2.0 * h);
  r.lhs_provenance = "max of N over " + std::to_string(pts.size()) + " window points (" + detail::counting_route(map) +
                     ")";
  r.rhs_provenance = "4 pi c_2h times the pull-back measure of S(zeta, 2h)";
  detail::finish_inequality(r, sup, 4.0 * kPi * ch * mu, 1e-9, false);
  r.seconds = sw.seconds();
  return r;
}

CheckResult check_inner_unit_ratio(const AnalyticSelfMap& map, int samples, double tol) {
  detail::Stopwatch sw;
  detail::require(map.is_rational() && map.is_inner(), "check_inner_unit_ratio: need a finite Blaschke product");
  detail::require(std::abs(map.origin_image()) < 1e-14, "check_inner_unit_ratio: need phi(0) = 0");
  CheckResult r;
  r.name = "check_inner_unit_ratio";
  r.parameters.emplace_back("map", map.render());
  r.parameters.emplace_back("samples", std::to_string(samples));

  const int side = std::max(1, static_cast<int>(std::lround(std::sqrt(static_cast<double>(samples)))));
  double worst = 0.0;
  int skipped = 0;
  for (int i = 0; i < side; ++i)
    for (int j = 0; j < side; ++j) {
      const double rad = 0.05 + 0.9 * (i + 0.5) / side;
      const cplx a = std::polar(rad, kTwoPi * (j + 0.25) / side);
      const std::vector<Preimage> pre = map.preimages(a);
      // near a critical value the preimages coalesce and the roots lose precision
      bool near_critical = false;
      for (std::size_t p = 0; p < pre.size(); ++p) {
        if (pre[p].multiplicity > 1) near_critical = true;
        for (std::size_t q = p + 1; q < pre.size(); ++q)
          if (std::abs(pre[p].point - pre[q].point) < 1e-3) near_critical = true;
      }
      if (near_critical) {
        ++skipped;
        continue;
      }
      double n = 0.0;
      for (const Preimage& p : pre) n -= p.multiplicity * std::log(std::abs(p.point));
      worst = std::max(worst, std::abs(n / -std::log(rad) - 1.0));
    }
  r.lhs_provenance = "preimage sums of -log|z|";
  r.rhs_provenance = "-log|a|";
  r.notes.push_back("lhs is the largest deviation of N(a)/(-log|a|) from 1");
  if (skipped) r.notes.push_back(std::to_string(skipped) + " samples near critical values skipped");
  detail::finish_inequality(r, worst, tol, 0.0, false);
  r.seconds = sw.seconds();
  return r;
}

CheckResult check_carleson_bound(const AnalyticSelfMap& map, const BoundaryArc& arc, double alpha) {
  detail::Stopwatch sw;
  if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("check_carleson_bound: alpha must lie in (0, 1]");
  CheckResult r;
  r.name = "check_carleson_bound";
  r.parameters.emplace_back("map", map.render());
  r.parameters.emplace_back("arc", render_arc(arc));
  r.parameters.emplace_back("alpha", fmt(alpha));
  const double p = std::abs(map.origin_image());
  const double c = (1.0 + p) / (1.0 - p);
  const double lhs = window_measure_G(map, arc, alpha);
  r.lhs_provenance = "pull-back measure of G_F(alpha) from boundary samples";
  r.rhs_provenance = "(C/alpha) sigma(F) with C = (1 + |phi(0)|)/(1 - |phi(0)|)";
  detail::finish_inequality(r, lhs, c / alpha * arc.sigma(), 1e-9, false);
  r.seconds = sw.seconds();
  return r;
}

DensityTable boundary_density_experiment(const AnalyticSelfMap& map, const BoundaryArc& arc,
                                         const std::vector<double>& alpha_grid) {
  DensityTable t;
  const double chi0 = harmonic_measure(arc, map.origin_image());
  const double target = predicate_measure(map, BoundaryPredicate::on_arc_pred(arc));
  const CountingFunction n(map);
  double prev_alpha = 0.0;
  for (double alpha : alpha_grid) {
    if (!(alpha > prev_alpha && alpha < 1.0))
      throw DomainError("boundary_density_experiment: the grid must increase inside (0, 1)");
    prev_alpha = alpha;
    if (alpha < chi0 - 1e-12) {
      t.notes.push_back("alpha " + fmt(alpha) + " below chi_F(phi(0)), skipped");
      continue;
    }
    DensityRow row;
    row.alpha = alpha;
    const QuadResult q = detail::level_curve_integral(map, n, arc, alpha);
    if (!q.converged) t.notes.push_back("alpha " + fmt(alpha) + ": quadrature did not converge");
    row.lhs = q.value;
    row.scaled = q.value * std::sin(kPi * alpha) / (kPi * kPi * (1.0 - alpha));
    row.target = target;
    row.gap = std::abs(row.scaled - target);
    t.rows.push_back(row);
  }
  for (std::size_t k = 1; k < t.rows.size(); ++k)
    if (t.rows[k].gap > t.rows[k - 1].gap + 1e-8) t.gap_non_increasing = false;
  return t;
}

}  // namespace nevpull
