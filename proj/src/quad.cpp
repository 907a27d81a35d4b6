#include "nevpull/quad.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "nevpull/errors.hpp"

namespace nevpull {

namespace {

// Kronrod abscissae and weights (QUADPACK qk15). Gauss nodes are xgk[1], xgk[3], xgk[5], xgk[7].
constexpr double xgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                           0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                           0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                           0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double wgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                           0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                           0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                           0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double wg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                          0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr int kNodes = 15;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kCascadeRatio = 0.2;
constexpr int kCascadeLevels = 16;
constexpr int kMaxRounds = 400;

struct Panel {
  double a, b;
  double value = 0.0, error = 0.0;
};

void panel_nodes(const Panel& p, double* x) {
  const double c = 0.5 * (p.a + p.b), h = 0.5 * (p.b - p.a);
  for (int j = 0; j < 7; ++j) {
    x[2 * j] = c - h * xgk[j];
    x[2 * j + 1] = c + h * xgk[j];
  }
  x[14] = c;
}

void apply_rule(const double* fv, Panel& p) {
  const double h = 0.5 * (p.b - p.a);
  const double fc = fv[14];
  double resg = fc * wg[3];
  double resk = fc * wgk[7];
  double resabs = std::abs(resk);
  for (int j = 0; j < 7; ++j) {
    const double f1 = fv[2 * j], f2 = fv[2 * j + 1];
    resk += wgk[j] * (f1 + f2);
    resabs += wgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) resg += wg[j / 2] * (f1 + f2);
  }
  const double reskh = 0.5 * resk;
  double resasc = wgk[7] * std::abs(fc - reskh);
  for (int j = 0; j < 7; ++j) resasc += wgk[j] * (std::abs(fv[2 * j] - reskh) + std::abs(fv[2 * j + 1] - reskh));

  const double ah = std::abs(h);
  p.value = resk * h;
  resabs *= ah;
  resasc *= ah;
  double err = std::abs((resk - resg) * h);
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  if (resabs > std::numeric_limits<double>::min() / (50.0 * kEps)) err = std::max(50.0 * kEps * resabs, err);
  p.error = err;
}

void evaluate_panels(const BatchFn& f, std::span<Panel> panels) {
  if (panels.empty()) return;
  std::vector<double> x(panels.size() * kNodes), y(panels.size() * kNodes);
  for (std::size_t i = 0; i < panels.size(); ++i) panel_nodes(panels[i], &x[i * kNodes]);
  f(x, y);
  for (double v : y)
    if (!std::isfinite(v)) throw QuadratureError("integrand returned a non-finite value");
  for (std::size_t i = 0; i < panels.size(); ++i) apply_rule(&y[i * kNodes], panels[i]);
}

bool splittable(const Panel& p) {
  const double scale = std::max({std::abs(p.a), std::abs(p.b), 1e-300});
  return (p.b - p.a) > 200.0 * kEps * scale;
}

void cascade(double singular, double other, std::vector<Panel>& out) {
  // panels shrinking geometrically toward `singular`
  std::vector<double> cuts;
  double w = 1.0;
  for (int k = 0; k < kCascadeLevels; ++k) {
    w *= kCascadeRatio;
    cuts.push_back(singular + (other - singular) * w);
  }
  std::vector<double> pts{other};
  pts.insert(pts.end(), cuts.begin(), cuts.end());
  pts.push_back(singular);
  if (singular < other) std::reverse(pts.begin(), pts.end());
  for (std::size_t i = 0; i + 1 < pts.size(); ++i)
    if (pts[i + 1] > pts[i]) out.push_back({pts[i], pts[i + 1]});
}

std::vector<Panel> initial_panels(double a, double b, const QuadOptions& opt) {
  std::vector<double> cuts{a, b};
  std::vector<double> sing;
  for (double s : opt.singular_points)
    if (s > a && s < b) {
      cuts.push_back(s);
      sing.push_back(s);
    }
  for (double s : opt.breakpoints)
    if (s > a && s < b) cuts.push_back(s);
  if (opt.singular_lo) sing.push_back(a);
  if (opt.singular_hi) sing.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::sort(sing.begin(), sing.end());

  auto is_singular = [&](double x) { return std::binary_search(sing.begin(), sing.end(), x); };

  std::vector<Panel> panels;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double lo = cuts[i], hi = cuts[i + 1];
    if (!(hi > lo)) continue;
    const bool sl = is_singular(lo), sh = is_singular(hi);
    if (sl && sh) {
      const double mid = 0.5 * (lo + hi);
      cascade(lo, mid, panels);
      cascade(hi, mid, panels);
    } else if (sl) {
      cascade(lo, hi, panels);
    } else if (sh) {
      cascade(hi, lo, panels);
    } else {
      const int n = std::max(1, opt.initial_panels);
      for (int k = 0; k < n; ++k)
        panels.push_back({lo + (hi - lo) * k / n, k + 1 == n ? hi : lo + (hi - lo) * (k + 1) / n});
    }
  }
  std::sort(panels.begin(), panels.end(), [](const Panel& l, const Panel& r) { return l.a < r.a; });
  return panels;
}

}  // namespace

QuadResult integrate_interval_batch(const BatchFn& f, double a, double b, const QuadOptions& opt) {
  if (!(a < b)) {
    if (a == b) return {};
    QuadResult r = integrate_interval_batch(f, b, a, opt);
    r.value = -r.value;
    return r;
  }
  std::vector<Panel> panels = initial_panels(a, b, opt);
  evaluate_panels(f, panels);

  QuadResult result;
  for (int round = 0;; ++round) {
    double total = 0.0, err = 0.0;
    for (const Panel& p : panels) {
      total += p.value;
      err += p.error;
    }
    result.value = total;
    result.error_estimate = err;
    result.panels_used = panels.size();
    const double tol = std::max(opt.abs_tol, opt.rel_tol * std::abs(total));
    if (err <= tol) {
      result.converged = true;
      break;
    }
    if (panels.size() >= opt.max_panels || round >= kMaxRounds) {
      result.converged = false;
      break;
    }

    std::vector<std::size_t> order(panels.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t l, std::size_t r) { return panels[l].error > panels[r].error; });
    std::vector<char> selected(panels.size(), 0);
    double remaining = err;
    std::size_t budget = opt.max_panels - panels.size();
    std::size_t n_selected = 0;
    for (std::size_t idx : order) {
      if (remaining <= 0.5 * tol || n_selected >= budget) break;
      if (!splittable(panels[idx])) continue;
      selected[idx] = 1;
      remaining -= panels[idx].error;
      ++n_selected;
    }
    if (n_selected == 0) {
      result.converged = false;
      break;
    }

    std::vector<Panel> next;
    next.reserve(panels.size() + n_selected);
    std::vector<std::size_t> fresh;
    for (std::size_t i = 0; i < panels.size(); ++i) {
      if (!selected[i]) {
        next.push_back(panels[i]);
        continue;
      }
      const double mid = 0.5 * (panels[i].a + panels[i].b);
      fresh.push_back(next.size());
      next.push_back({panels[i].a, mid});
      fresh.push_back(next.size());
      next.push_back({mid, panels[i].b});
    }
    std::vector<Panel> children(fresh.size());
    for (std::size_t k = 0; k < fresh.size(); ++k) children[k] = next[fresh[k]];
    evaluate_panels(f, children);
    for (std::size_t k = 0; k < fresh.size(); ++k) next[fresh[k]] = children[k];
    panels = std::move(next);
  }
  if (!result.converged && opt.strict)
    throw QuadratureError("adaptive quadrature did not reach the requested tolerance (estimate " +
                          std::to_string(result.error_estimate) + ")");
  return result;
}

QuadResult integrate_interval(const RealFn& f, double a, double b, const QuadOptions& opt) {
  const Exec exec = opt.exec;
  return integrate_interval_batch(
      [&](std::span<const double> x, std::span<double> y) { kernels::map_scalar(exec, f, x, y); }, a, b, opt);
}

QuadResult integrate_curve(const PlaneFn& f, const CircularArcCurve& curve, const QuadOptions& opt,
                           const PlaneSingularities& sing) {
  if (curve.empty() || curve.length <= 0.0) return {};
  QuadOptions o = opt;
  for (const cplx& p : sing.points)
    if (auto s = curve.param_near(p, 1e-10)) o.singular_points.push_back(*s);
  for (double rho : sing.kink_radii)
    for (double s : curve.params_at_radius(rho)) o.breakpoints.push_back(s);
  return integrate_interval([&](double s) { return f(curve.point(s)); }, 0.0, curve.length, o);
}

Quad2DOptions::Quad2DOptions() {
  outer.abs_tol = 1e-11;
  outer.rel_tol = 1e-10;
  inner.abs_tol = 1e-13;
  inner.rel_tol = 1e-12;
  inner.exec = Exec::serial;
}

namespace {

// shift an angle into [lo, lo + 2pi)
double into_range(double a, double lo) {
  double x = std::fmod(a - lo, kTwoPi);
  if (x < 0.0) x += kTwoPi;
  return lo + x;
}

struct PolarSetup {
  cplx center;
  std::function<std::pair<double, double>(double)> psi_range;
};

QuadResult integrate_polar(const PlaneFn& f, const PolarSetup& setup, double rho_lo, double rho_hi,
                           const Quad2DOptions& opt) {
  const cplx c = setup.center;
  const double cabs = std::abs(c);

  QuadOptions outer = opt.outer;
  for (double kappa : opt.sing.kink_radii) {
    outer.breakpoints.push_back(std::abs(kappa - cabs));
    outer.breakpoints.push_back(kappa + cabs);
  }
  for (const cplx& p : opt.sing.points) {
    const double d = std::abs(p - c);
    if (d < 1e-14)
      outer.singular_lo = true;
    else
      outer.breakpoints.push_back(d);
  }

  auto inner_integral = [&](double rho) {
    const auto [psi0, psi1] = setup.psi_range(rho);
    if (!(psi1 > psi0)) return 0.0;
    QuadOptions in = opt.inner;
    if (cabs > 0.0) {
      for (double kappa : opt.sing.kink_radii) {
        const double cv = (kappa * kappa - cabs * cabs - rho * rho) / (2.0 * rho * cabs);
        if (cv > -1.0 && cv < 1.0) {
          const double base = std::arg(c), off = std::acos(cv);
          in.breakpoints.push_back(into_range(base + off, psi0));
          in.breakpoints.push_back(into_range(base - off, psi0));
        }
      }
    }
    for (const cplx& p : opt.sing.points)
      if (std::abs(p - c) >= 1e-14) in.breakpoints.push_back(into_range(std::arg(p - c), psi0));
    const QuadResult r =
        integrate_interval([&](double psi) { return f(c + std::polar(rho, psi)); }, psi0, psi1, in);
    return rho * r.value / kPi;
  };

  return integrate_interval(inner_integral, rho_lo, rho_hi, outer);
}

}  // namespace

QuadResult integrate_window_2d(const PlaneFn& f, const WindowS& window, const Quad2DOptions& opt) {
  const cplx zeta = window.zeta / std::abs(window.zeta);
  const double h = std::min(window.h, 2.0);
  PolarSetup setup{zeta, [zeta](double rho) {
                     const double a0 = std::acos(std::clamp(-0.5 * rho, -1.0, 1.0));
                     const double base = std::arg(zeta);
                     return std::pair{base + a0, base + kTwoPi - a0};
                   }};
  return integrate_polar(f, setup, 0.0, h, opt);
}

QuadResult integrate_disk_2d(const PlaneFn& f, double r, const Quad2DOptions& opt) {
  if (!(r > 0.0 && r <= 1.0)) throw DomainError("integrate_disk_2d: radius must lie in (0, 1]");
  double start = 0.0;
  if (!opt.sing.points.empty() && std::abs(opt.sing.points.front()) > 0.0)
    start = std::arg(opt.sing.points.front()) - kPi;
  PolarSetup setup{cplx{0.0, 0.0}, [start](double) { return std::pair{start, start + kTwoPi}; }};
  Quad2DOptions o = opt;
  for (double kappa : opt.sing.kink_radii) o.outer.breakpoints.push_back(kappa);
  return integrate_polar(f, setup, 0.0, r, o);
}

QuadResult integrate_profile(const RealFn& weight, const ProfileFunction& profile, double lo, double hi,
                             const QuadOptions& opt) {
  QuadOptions o = opt;
  for (double u : profile.breakpoints)
    if (u > lo && u < hi) o.breakpoints.push_back(u);
  for (double u : profile.singular_points)
    if (u > lo && u < hi) o.singular_points.push_back(u);
    else if (u == hi) o.singular_hi = true;
  o.singular_lo = true;
  return integrate_interval([&](double u) { return weight(u) * profile.mu(u); }, lo, hi, o);
}

double golden_section_min(const RealFn& g, double lo, double hi, double tol) {
  const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - inv_phi * (hi - lo), x2 = lo + inv_phi * (hi - lo);
  double g1 = g(x1), g2 = g(x2);
  for (int it = 0; it < 200 && hi - lo > tol; ++it) {
    if (g1 < g2) {
      hi = x2;
      x2 = x1;
      g2 = g1;
      x1 = hi - inv_phi * (hi - lo);
      g1 = g(x1);
    } else {
      lo = x1;
      x1 = x2;
      g1 = g2;
      x2 = lo + inv_phi * (hi - lo);
      g2 = g(x2);
    }
  }
  return 0.5 * (lo + hi);
}

double window_area(double h) {
  if (h <= 0.0) return 0.0;
  if (h >= 2.0) return 1.0;
  const double area = h * h * std::acos(0.5 * h) + std::acos(1.0 - 0.5 * h * h) - 0.5 * h * std::sqrt(4.0 - h * h);
  return area / kPi;
}

}  // namespace nevpull
