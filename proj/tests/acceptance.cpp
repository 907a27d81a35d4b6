// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#include "nevpull/cli.hpp"
#include "nevpull/identities.hpp"
#include "nevpull/nevanlinna.hpp"
#include "nevpull/quad.hpp"

using namespace nevpull;

namespace {

AnalyticSelfMap bl(std::vector<cplx> z) { return AnalyticSelfMap::blaschke(std::move(z)); }
AnalyticSelfMap sc(double t, AnalyticSelfMap m) { return AnalyticSelfMap::scaled(t, std::move(m)); }

std::vector<AnalyticSelfMap> standard_suite() {
  return {bl({0.0}),          bl({0.0, 0.0}),           bl({0.0, 0.5}), bl({0.0, cplx{0.0, 0.3}, -0.4}),
          sc(0.5, bl({0.0})), sc(0.9, bl({0.0})), AnalyticSelfMap::atomic_singular(1.0)};
}

double rel(double lhs, double rhs) { return std::abs(lhs - rhs) / std::max(std::abs(rhs), 1e-12); }

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

int failures = 0;

void criterion(int id, const char* title, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%s criterion %2d: %s [%.1f s]%s%s\n", o.ok ? "PASS" : "FAIL", id, title, secs,
              o.detail.empty() ? "" : " -- ", o.detail.c_str());
  std::fflush(stdout);
  if (!o.ok) ++failures;
}

std::string fmt(const char* f, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string config_path = argc > 1 ? argv[1] : "configs/standard.ini";
  const BoundaryArc upper = BoundaryArc::upper_half();
  const BoundaryArc quarter{kPi / 4, kPi / 4};
  const BoundaryArc tilted{2.5, 0.4};

  criterion(1, "window identity on the standard suite, 6 windows each", [&] {
    Outcome o;
    const std::vector<std::pair<cplx, double>> windows{{1.0, 0.5},
                                                       {-1.0, 0.5},
                                                       {cplx{0.0, 1.0}, 0.3},
                                                       {cplx{0.0, -1.0}, 0.9},
                                                       {std::polar(1.0, 2.0), 0.2},
                                                       {std::polar(1.0, -0.7), 0.6}};
    double worst = 0.0, slowest = 0.0;
    for (const auto& m : standard_suite())
      for (const auto& [zeta, h] : windows) {
        const auto r = check_window_identity(m, zeta, h);
        worst = std::max(worst, rel(r.lhs, r.rhs));
        slowest = std::max(slowest, r.seconds);
        if (rel(r.lhs, r.rhs) > 1e-5) o.fail(m.render() + " rel err " + fmt("%.2e", rel(r.lhs, r.rhs)));
        if (r.seconds > 10.0) o.fail(m.render() + " took " + fmt("%.1f s", r.seconds));
      }
    if (o.ok) o.detail = fmt("worst rel err %.2e, slowest check %.2f s", worst, slowest);
    return o;
  });

  criterion(2, "level-curve identity", [&] {
    Outcome o;
    const auto base = check_level_measure_identity(bl({0.0}), upper, 0.5);
    const double target = kPi * kPi / 4.0;
    if (std::abs(base.lhs - target) > 1e-6 || std::abs(base.rhs - target) > 1e-6)
      o.fail(fmt("identity map: lhs %.10f rhs %.10f", base.lhs, base.rhs));
    struct Case {
      AnalyticSelfMap m;
      BoundaryArc f;
      double alpha;
    };
    const std::vector<Case> cases{{bl({0.0, 0.0}), quarter, 0.6},
                                  {bl({0.0, 0.5}), upper, 0.7},
                                  {bl({0.0, cplx{0.0, 0.3}, -0.4}), tilted, 0.8},
                                  {sc(0.9, bl({0.0})), upper, 0.6},
                                  {sc(0.5, bl({0.0})), quarter, 0.5},
                                  {AnalyticSelfMap::atomic_singular(1.0), upper, 0.7}};
    double worst = 0.0;
    for (const auto& c : cases) {
      const auto r = check_level_measure_identity(c.m, c.f, c.alpha);
      worst = std::max(worst, rel(r.lhs, r.rhs));
      if (rel(r.lhs, r.rhs) > 1e-5) o.fail(c.m.render() + fmt(" rel err %.2e", rel(r.lhs, r.rhs)));
    }
    if (o.ok) o.detail = fmt("pi^2/4 case abs err %.2e; worst rel err %.2e", std::abs(base.lhs - target), worst);
    return o;
  });

  criterion(3, "circle and disk averages of N, 6 configurations each", [&] {
    Outcome o;
    double worst = 0.0;
    const std::vector<std::pair<AnalyticSelfMap, double>> circles{
        {bl({0.0}), 0.3},          {sc(0.7, bl({0.0})), 0.3}, {bl({0.5}), 0.25},
        {bl({0.0, cplx{0.0, 0.3}, -0.4}), 0.5}, {AnalyticSelfMap::atomic_singular(1.0), 0.2},
        {sc(0.9, bl({0.0, 0.5})), 0.6}};
    for (const auto& [m, r] : circles) {
      const auto c = check_circle_average(m, r);
      worst = std::max(worst, rel(c.lhs, c.rhs));
      if (rel(c.lhs, c.rhs) > 1e-5) o.fail("circle " + m.render() + fmt(" rel err %.2e", rel(c.lhs, c.rhs)));
    }
    // step profile: N averages to log(t/r) exactly
    const auto step = check_circle_average(sc(0.7, bl({0.0})), 0.3);
    const double exact = std::log(0.7 / 0.3);
    if (std::abs(step.lhs - exact) > 1e-8 || std::abs(step.rhs - exact) > 1e-8)
      o.fail(fmt("step profile off log(t/r): lhs %.12f rhs %.12f", step.lhs, step.rhs));
    const std::vector<std::pair<AnalyticSelfMap, double>> disks{
        {bl({0.5}), 0.25},
        {AnalyticSelfMap::atomic_singular(1.0), 0.2},
        {sc(0.9, bl({0.5})), 0.2},
        {bl({cplx{0.0, 0.6}, 0.3}), 0.1},
        {sc(0.5, AnalyticSelfMap::atomic_singular(1.0)), 0.15},
        {bl({-0.7}), 0.5}};
    for (const auto& [m, r] : disks) {
      const auto c = check_disk_average(m, r);
      worst = std::max(worst, rel(c.lhs, c.rhs));
      if (rel(c.lhs, c.rhs) > 1e-5) o.fail("disk " + m.render() + fmt(" rel err %.2e", rel(c.lhs, c.rhs)));
    }
    if (o.ok) o.detail = fmt("worst rel err %.2e; step case err %.2e", worst, std::abs(step.rhs - exact));
    return o;
  });

  criterion(4, "Stanton and Littlewood-Paley", [&] {
    Outcome o;
    const Polynomial z{{0.0, 1.0}};
    const auto lp = check_littlewood_paley(bl({0.0}), z);
    if (std::abs(lp.lhs - 1.0) > 1e-6 || std::abs(lp.rhs - 1.0) > 1e-6)
      o.fail(fmt("identity: lhs %.10f rhs %.10f", lp.lhs, lp.rhs));
    const auto st = check_stanton(bl({0.0}), stanton::ModulusSquared{});
    if (std::abs(st.lhs - 1.0) > 1e-6 || std::abs(st.rhs - 1.0) > 1e-6)
      o.fail(fmt("Stanton identity: lhs %.10f rhs %.10f", st.lhs, st.rhs));
    double worst = 0.0;
    for (const auto& m : {bl({0.0}), bl({0.0, 0.0}), bl({0.0, 0.5}), bl({0.0, cplx{0.0, 0.3}, -0.4})}) {
      const CountingFunction n(m);
      Quad2DOptions q;
      q.sing.points.push_back(m.origin_image());
      const double v = integrate_disk_2d([&](cplx w) { return n(w); }, 1.0, q).value;
      worst = std::max(worst, std::abs(v - 0.5));
      if (std::abs(v - 0.5) > 1e-6) o.fail(m.render() + fmt(" integral of N = %.10f", v));
      const auto s = check_stanton(m, stanton::ModulusSquared{});
      if (std::abs(s.lhs - s.rhs) > 1e-6) o.fail(m.render() + fmt(" Stanton lhs %.10f rhs %.10f", s.lhs, s.rhs));
    }
    if (o.ok) o.detail = fmt("identity err %.2e; worst |integral N - 1/2| %.2e", std::abs(lp.rhs - 1.0), worst);
    return o;
  });

  criterion(5, "gradient of harmonic measure on level curves", [&] {
    Outcome o;
    double worst = 0.0;
    for (const auto& f : {upper, quarter, tilted})
      for (double alpha : {0.3, 0.5, 0.8}) {
        const auto r = check_gradient_lemma(f, alpha, 11, 1e-6);
        worst = std::max(worst, r.lhs);
        if (!r.pass()) o.fail(fmt("alpha %.2f deviation %.2e", alpha, r.lhs));
      }
    const auto centre = check_gradient_lemma(upper, 0.5, 1, 1e-9);
    const double formula = std::sin(kPi * 0.5) / kPi;
    if (!centre.pass() || std::abs(formula - 1.0 / kPi) > 1e-15)
      o.fail(fmt("value at 0 deviates by %.2e", centre.lhs));
    if (o.ok) o.detail = fmt("max deviation %.2e over 99 points; at z = 0 %.2e", worst, centre.lhs);
    return o;
  });

  criterion(6, "coarea formula", [&] {
    Outcome o;
    const std::vector<std::pair<CoareaFunction, double>> cases{{CoareaFunction::one, 1.0},
                                                               {CoareaFunction::half_disk_indicator, 0.25},
                                                               {CoareaFunction::one_minus_r2, 0.5}};
    double worst = 0.0;
    for (const auto& [g, v] : cases) {
      const auto r = check_coarea(g, upper);
      worst = std::max({worst, std::abs(r.lhs - v), std::abs(r.rhs - v)});
      if (std::abs(r.lhs - v) > 1e-6 || std::abs(r.rhs - v) > 1e-6)
        o.fail(std::string(to_string(g)) + fmt(": lhs %.10f rhs %.10f", r.lhs, r.rhs));
    }
    if (o.ok) o.detail = fmt("worst deviation %.2e", worst);
    return o;
  });

  criterion(7, "counting function by two routes", [&] {
    Outcome o;
    double worst_dual = 0.0, worst_inner = 0.0;
    auto points = [](int n) {
      std::vector<cplx> out;
      for (int k = 0; k < n; ++k) out.push_back(std::polar(0.95 * std::sqrt((k + 0.5) / n), 2.399963229728653 * k));
      return out;
    };
    for (const auto& m : {bl({0.0, 0.0}), bl({0.0, 0.5}), bl({0.0, cplx{0.0, 0.3}, -0.4}), sc(0.9, bl({0.3, -0.5}))})
      for (cplx a : points(50)) {
        const double d = std::abs(counting_roots(m, a).value - counting_integral(m, a).value);
        worst_dual = std::max(worst_dual, d);
        if (d > 1e-7) o.fail(m.render() + fmt(" discrepancy %.2e", d));
      }
    for (const auto& m : {bl({0.0}), bl({0.0, 0.0}), bl({0.0, 0.5}), bl({0.0, cplx{0.0, 0.3}, -0.4})})
      for (cplx a : points(50)) {
        const double d = std::abs(counting_roots(m, a).value + std::log(std::abs(a)));
        worst_inner = std::max(worst_inner, d);
        if (d > 1e-10) o.fail(m.render() + fmt(" N + log|a| = %.2e", d));
      }
    if (o.ok) o.detail = fmt("worst discrepancy %.2e; worst inner deviation %.2e", worst_dual, worst_inner);
    return o;
  });

  criterion(8, "inequalities hold on the standard suite", [&] {
    Outcome o;
    int checks = 0, vacuous = 0;
    auto take = [&](const CheckResult& r, const std::string& what) {
      ++checks;
      if (r.status == CheckResult::Status::vacuous) ++vacuous;
      if (!r.pass()) o.fail(what + fmt(" violated: lhs %.6g rhs %.6g", r.lhs, r.rhs));
    };
    const std::vector<std::pair<cplx, double>> windows{{1.0, 0.25}, {-1.0, 0.2}, {cplx{0.0, 1.0}, 0.1}};
    for (const auto& m : standard_suite()) {
      for (const auto& [zeta, h] : windows) {
        take(check_window_inequality(m, zeta, h), m.render() + " window inequality");
        take(check_average_ratio_bound(m, zeta, h), m.render() + " average ratio");
        take(check_sup_bound(m, zeta, h), m.render() + " sup bound");
      }
      for (const auto& f : {upper, quarter, BoundaryArc{2.0, 0.05}})
        for (double alpha : {0.3, 0.5, 0.7}) take(check_carleson_bound(m, f, alpha), m.render() + " Carleson bound");
    }
    const auto sharp = check_average_ratio_bound(bl({0.0}), 1.0, 0.05);
    if (!(sharp.lhs >= 0.9 && sharp.lhs <= 1.1)) o.fail(fmt("inner-map ratio %.6f outside [0.9, 1.1]", sharp.lhs));
    if (o.ok)
      o.detail = std::to_string(checks) + " checks, " + std::to_string(vacuous) + " vacuous" +
                 fmt("; inner ratio at h = 0.05: %.10f", sharp.lhs);
    return o;
  });

  criterion(9, "boundary density limit along alpha -> 1", [&] {
    Outcome o;
    std::string d;
    for (const auto& [m, f] : {std::pair{bl({0.0}), upper}, std::pair{bl({0.0, 0.0}), quarter}}) {
      const auto t = boundary_density_experiment(m, f, {0.9, 0.99, 0.999});
      if (t.rows.size() != 3) {
        o.fail(m.render() + " rows missing");
        continue;
      }
      if (!t.gap_non_increasing) o.fail(m.render() + " gaps increase");
      if (t.rows.back().gap > 1e-2) o.fail(m.render() + fmt(" final gap %.2e", t.rows.back().gap));
      d += (d.empty() ? "" : "; ") + m.render() + " gaps";
      for (const auto& r : t.rows) d += fmt(" %.1e", r.gap);
    }
    if (o.ok) o.detail = d;
    return o;
  });

  criterion(10, "full suite runtime and determinism", [&] {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    const RunConfig cfg = load_run_config(config_path);
    const std::string first = report_to_json(run_suite(cfg), "fixed");
    int failed = 0;
    for (const auto& m : standard_suite()) {
      RunConfig c;
      c.map_spec = m.render();
      failed += run_suite(c).failed;
    }
    const std::string second = report_to_json(run_suite(cfg), "fixed");
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (first != second) o.fail("reports differ between runs");
    if (secs > 300.0) o.fail(fmt("took %.0f s", secs));
    if (failed) o.fail(std::to_string(failed) + " failures in the default suites");
    if (o.ok) o.detail = fmt("standard config twice plus defaults on 7 maps in %.1f s; reports identical", secs);
    return o;
  });

  std::printf("%s: %d of 10 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
