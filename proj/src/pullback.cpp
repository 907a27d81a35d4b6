#include "nevpull/pullback.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nevpull/errors.hpp"

namespace nevpull {

namespace {

constexpr double kClosure = 1e-12;
constexpr double kBoundaryModulus = 1.0 - 1e-13;

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace

BoundarySampler::BoundarySampler(const AnalyticSelfMap& map, Exec exec)
    : map_(std::make_shared<const AnalyticSelfMap>(map)), chart_(map.boundary_chart()), exec_(exec) {}

std::vector<cplx> BoundarySampler::grid(std::size_t n) const {
  if (!is_power_of_two(n)) throw DomainError("BoundarySampler: grid size must be a power of two");
  std::shared_ptr<const std::vector<cplx>> fine;
  {
    std::lock_guard lock(mu_);
    if (!finest_ || finest_->size() < n) {
      std::vector<double> s(n);
      for (std::size_t i = 0; i < n; ++i) s[i] = kTwoPi * static_cast<double>(i) / static_cast<double>(n);
      auto w = std::make_shared<std::vector<cplx>>(n);
      kernels::sample_chart(kernels::in_parallel_region() ? Exec::serial : exec_, chart_, s, *w);
      finest_ = std::move(w);
    }
    fine = finest_;
  }
  const std::size_t stride = fine->size() / n;
  std::vector<cplx> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = (*fine)[i * stride];
  return out;
}

// --- predicates ---------------------------------------------------------------

BoundaryPredicate BoundaryPredicate::window_s(cplx zeta, double u) {
  BoundaryPredicate p;
  p.kind = Kind::window_s;
  p.zeta = zeta;
  p.u = u;
  return p;
}

BoundaryPredicate BoundaryPredicate::window_g(const BoundaryArc& arc, double u) {
  if (!(u > 0.0 && u < 1.0)) throw DomainError("window_g: level must lie in (0, 1)");
  BoundaryPredicate p;
  p.kind = Kind::window_g;
  p.arc = arc;
  p.u = u;
  return p;
}

BoundaryPredicate BoundaryPredicate::radial(double u) {
  BoundaryPredicate p;
  p.kind = Kind::radial;
  p.u = u;
  return p;
}

BoundaryPredicate BoundaryPredicate::lft_at_least(const LinearFractional& f, double u) {
  BoundaryPredicate p;
  p.kind = Kind::lft_at_least;
  p.lft = f;
  p.u = u;
  return p;
}

BoundaryPredicate BoundaryPredicate::disk(double u) {
  BoundaryPredicate p;
  p.kind = Kind::disk;
  p.u = u;
  return p;
}

BoundaryPredicate BoundaryPredicate::on_arc_pred(const BoundaryArc& arc) {
  BoundaryPredicate p;
  p.kind = Kind::on_arc;
  p.arc = arc;
  return p;
}

bool BoundaryPredicate::holds(cplx w) const {
  switch (kind) {
    case Kind::window_s:
      return std::abs(w - zeta) <= u + kClosure;
    case Kind::window_g:
      if (std::abs(w) >= kBoundaryModulus) return arc.contains_angle(std::arg(w));
      return harmonic_measure(arc, w) >= u - kClosure;
    case Kind::radial:
      return std::abs(w) >= u - kClosure;
    case Kind::lft_at_least:
      return std::abs(lft(w)) >= u - kClosure;
    case Kind::disk:
      return std::abs(w) < u - kClosure;
    case Kind::on_arc:
      return std::abs(w) >= kBoundaryModulus && arc.contains_angle(std::arg(w));
    case Kind::everything:
      return true;
  }
  return false;
}

double BoundaryPredicate::scalar(cplx w) const {
  switch (kind) {
    case Kind::window_s:
      return std::abs(w - zeta);
    case Kind::window_g:
      if (std::abs(w) >= kBoundaryModulus) return std::numeric_limits<double>::quiet_NaN();
      return harmonic_measure(arc, w);
    case Kind::radial:
    case Kind::disk:
      return std::abs(w);
    case Kind::lft_at_least:
      return std::abs(lft(w));
    case Kind::on_arc:
    case Kind::everything:
      break;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

// --- measures -------------------------------------------------------------------

namespace {

struct Extremum {
  double param;
  double value;
};

void dedupe(std::vector<double>& v, double gap) {
  std::sort(v.begin(), v.end());
  std::vector<double> out;
  for (double x : v)
    if (out.empty() || x - out.back() > gap) out.push_back(x);
  v = std::move(out);
}

std::vector<Extremum> find_extrema(const BoundarySampler& sampler, const BoundaryPredicate& pred) {
  constexpr std::size_t n = 4096;
  const std::vector<cplx> w = sampler.grid(n);
  std::vector<double> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = pred.scalar(w[i]);
  const BoundaryChart& chart = sampler.chart();
  const double step = kTwoPi / n;

  std::vector<Extremum> out;
  for (std::size_t i = 0; i < n; ++i) {
    const double prev = d[(i + n - 1) % n], cur = d[i], next = d[(i + 1) % n];
    if (!std::isfinite(prev) || !std::isfinite(cur) || !std::isfinite(next)) continue;
    if (std::abs(prev - cur) <= 1e-11 && std::abs(next - cur) <= 1e-11) continue;  // flat run
    const bool is_min = cur <= prev && cur <= next, is_max = cur >= prev && cur >= next;
    if (!is_min && !is_max) continue;
    const double sign = is_min ? 1.0 : -1.0;
    auto g = [&](double s) {
      const double v = pred.scalar(chart.value(s));
      return std::isfinite(v) ? sign * v : std::numeric_limits<double>::infinity();
    };
    const double lo = (static_cast<double>(i) - 1.0) * step, hi = (static_cast<double>(i) + 1.0) * step;
    double s = golden_section_min(g, lo, hi);
    const double v = sign * g(s);
    if (!std::isfinite(v)) continue;
    s = std::fmod(s + kTwoPi, kTwoPi);
    out.push_back({s, v});
  }
  return out;
}

MeasureResult measure_on_grid(const BoundarySampler& sampler, const BoundaryPredicate& pred, std::size_t n,
                              double crossing_tol, const std::vector<double>& extras) {
  const BoundaryChart& chart = sampler.chart();
  const std::vector<cplx> grid = sampler.grid(n);
  const double step = kTwoPi / static_cast<double>(n);

  // nodes: the uniform grid plus the extremum parameters, closed with 2 pi
  std::vector<double> s(n);
  std::vector<cplx> w(grid);
  for (std::size_t i = 0; i < n; ++i) s[i] = step * static_cast<double>(i);
  for (double e : extras) {
    const double k = e / step;
    if (std::abs(k - std::round(k)) * step < 1e-14) continue;
    s.push_back(e);
    w.push_back(chart.value(e));
  }
  std::vector<std::size_t> order(s.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) { return s[l] < s[r]; });

  const std::size_t m = order.size();
  std::vector<char> in(m);
  std::vector<double> node(m + 1);
  for (std::size_t k = 0; k < m; ++k) {
    node[k] = s[order[k]];
    in[k] = pred.holds(w[order[k]]);
  }
  node[m] = kTwoPi;

  MeasureResult r;
  r.samples = n;
  double total = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    const bool a = in[k], b = in[(k + 1) % m];
    const double s0 = node[k], s1 = node[k + 1];
    if (a && b) {
      total += chart.measure(s0, s1);
    } else if (a != b) {
      ++r.crossings;
      double lo = s0, hi = s1;
      while (hi - lo > crossing_tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (pred.holds(chart.value(mid)) == a)
          lo = mid;
        else
          hi = mid;
      }
      const double c = 0.5 * (lo + hi);
      total += a ? chart.measure(s0, c) : chart.measure(c, s1);
    }
  }
  r.value = std::clamp(total, 0.0, 1.0);
  if (r.crossings > n / 4)
    r.warnings.push_back("predicate changes sign " + std::to_string(r.crossings) + " times on a grid of " +
                         std::to_string(n) + " samples; resolution may be insufficient");
  return r;
}

}  // namespace

std::vector<double> scalar_extrema(const BoundarySampler& sampler, const BoundaryPredicate& pred) {
  std::vector<double> out;
  for (const Extremum& e : find_extrema(sampler, pred)) out.push_back(e.param);
  dedupe(out, 1e-14);
  return out;
}

MeasureResult predicate_measure(const BoundarySampler& sampler, const BoundaryPredicate& pred,
                                const PredicateOptions& opt, const std::vector<double>* extrema) {
  if (!is_power_of_two(opt.base_samples)) throw DomainError("predicate_measure: base_samples must be a power of two");
  std::vector<double> own;
  if (!extrema) {
    own = scalar_extrema(sampler, pred);
    extrema = &own;
  }
  std::size_t n = opt.base_samples;
  MeasureResult coarse = measure_on_grid(sampler, pred, n, opt.crossing_tol, *extrema);
  for (;;) {
    MeasureResult fine = measure_on_grid(sampler, pred, 2 * n, opt.crossing_tol, *extrema);
    if (std::abs(fine.value - coarse.value) <= opt.stability_tol) return fine;
    if (2 * n >= opt.max_samples) {
      fine.warnings.push_back("measure did not stabilise under grid doubling (last change " +
                              std::to_string(std::abs(fine.value - coarse.value)) + ")");
      return fine;
    }
    n *= 2;
    coarse = std::move(fine);
  }
}

double predicate_measure(const AnalyticSelfMap& map, const BoundaryPredicate& pred, double tol) {
  const BoundarySampler sampler(map);
  PredicateOptions opt;
  opt.crossing_tol = tol;
  return predicate_measure(sampler, pred, opt).value;
}

double window_measure_S(const AnalyticSelfMap& map, cplx zeta, double u) {
  if (!(u >= 0.0)) throw DomainError("window_measure_S: u must be nonnegative");
  return predicate_measure(map, BoundaryPredicate::window_s(zeta, u));
}

double window_measure_G(const AnalyticSelfMap& map, const BoundaryArc& arc, double u) {
  return predicate_measure(map, BoundaryPredicate::window_g(arc, u));
}

double radial_complement_measure(const AnalyticSelfMap& map, double u) {
  if (!(u > 0.0 && u <= 1.0)) throw DomainError("radial_complement_measure: u must lie in (0, 1]");
  return predicate_measure(map, BoundaryPredicate::radial(u));
}

// --- families and profiles -------------------------------------------------------

BoundaryPredicate WindowFamily::at(double u) const {
  switch (kind) {
    case Kind::s_window:
      return BoundaryPredicate::window_s(zeta, u);
    case Kind::g_window:
      return BoundaryPredicate::window_g(arc, u);
    case Kind::radial:
      return BoundaryPredicate::radial(u);
    case Kind::lft_at_least:
      return BoundaryPredicate::lft_at_least(lft, u);
    case Kind::disk:
      return BoundaryPredicate::disk(u);
  }
  return {};
}

const char* WindowFamily::name() const {
  switch (kind) {
    case Kind::s_window:
      return "S";
    case Kind::g_window:
      return "G";
    case Kind::radial:
      return "radial";
    case Kind::lft_at_least:
      return "lft";
    case Kind::disk:
      return "disk";
  }
  return "?";
}

namespace {

struct ProfileBreaks {
  std::vector<double> extrema;   // chart parameters
  std::vector<double> atoms;     // profile variable values
  std::vector<double> critical;  // profile variable values
};

ProfileBreaks find_breaks(const BoundarySampler& sampler, const WindowFamily& fam) {
  const BoundaryPredicate probe = fam.at(0.5);
  constexpr std::size_t n = 4096;
  constexpr int kRun = 16;
  const std::vector<cplx> w = sampler.grid(n);
  std::vector<double> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = probe.scalar(w[i]);

  ProfileBreaks out;
  // atoms: long runs of (numerically) constant scalar
  int run = 1;
  for (std::size_t k = 1; k <= n + kRun; ++k) {
    const double a = d[(k - 1) % n], b = d[k % n];
    if (std::isfinite(a) && std::isfinite(b) && std::abs(a - b) <= 1e-11) {
      if (++run == kRun) out.atoms.push_back(b);
    } else {
      run = 1;
    }
  }
  for (const Extremum& e : find_extrema(sampler, probe)) {
    out.extrema.push_back(e.param);
    out.critical.push_back(e.value);
  }
  dedupe(out.extrema, 1e-14);
  dedupe(out.atoms, 1e-12);
  dedupe(out.critical, 1e-12);
  // a critical value that is also an atom is a jump, not an onset
  std::vector<double> crit;
  for (double c : out.critical)
    if (std::none_of(out.atoms.begin(), out.atoms.end(), [&](double a) { return std::abs(a - c) <= 1e-10; }))
      crit.push_back(c);
  out.critical = std::move(crit);
  return out;
}

}  // namespace

MeasureProfile measure_profile(const BoundarySampler& sampler, const WindowFamily& family,
                               const std::vector<double>& grid) {
  for (std::size_t k = 1; k < grid.size(); ++k)
    if (!(grid[k] > grid[k - 1])) throw DomainError("measure_profile: grid must be strictly increasing");
  MeasureProfile prof;
  prof.grid = grid;
  prof.values.assign(grid.size(), 0.0);
  sampler.grid(8192);  // warm the cache before any concurrent use
  const ProfileBreaks br = find_breaks(sampler, family);

  const long n = static_cast<long>(grid.size());
  std::vector<std::exception_ptr> errors(grid.size());
#pragma omp parallel for schedule(dynamic, 1) if (n > 1 && !kernels::in_parallel_region())
  for (long k = 0; k < n; ++k) {
    try {
      prof.values[k] = predicate_measure(sampler, family.at(grid[k]), {}, &br.extrema).value;
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  const std::size_t m = grid.size();
  prof.is_jump.assign(m, false);
  std::vector<double> delta(m > 0 ? m - 1 : 0);
  for (std::size_t k = 0; k + 1 < m; ++k) delta[k] = prof.values[k + 1] - prof.values[k];
  for (std::size_t k = 0; k < delta.size(); ++k) {
    double trend = 0.0;
    int cnt = 0;
    if (k > 0) trend += std::abs(delta[k - 1]), ++cnt;
    if (k + 1 < delta.size()) trend += std::abs(delta[k + 1]), ++cnt;
    trend = cnt ? trend / cnt : 0.0;
    if (std::abs(delta[k]) > 1e-9 && std::abs(delta[k]) > 10.0 * trend) prof.is_jump[k] = true;
  }
  const double sgn = family.nondecreasing() ? 1.0 : -1.0;
  for (double dlt : delta)
    if (sgn * dlt < -1e-12) prof.monotone = false;

  if (!grid.empty())
    for (double a : br.atoms)
      if (a >= grid.front() && a <= grid.back()) prof.jump_locations.push_back(a);
  return prof;
}

MeasureProfile measure_profile(const AnalyticSelfMap& map, const WindowFamily& family,
                               const std::vector<double>& grid) {
  const BoundarySampler sampler(map);
  return measure_profile(sampler, family, grid);
}

ProfileFunction profile_function(std::shared_ptr<const BoundarySampler> sampler, const WindowFamily& family) {
  sampler->grid(8192);
  const ProfileBreaks br = find_breaks(*sampler, family);
  ProfileFunction pf;
  pf.breakpoints = br.atoms;
  pf.singular_points = br.critical;
  auto extrema = std::make_shared<const std::vector<double>>(br.extrema);
  pf.mu = [sampler, family, extrema](double u) {
    return predicate_measure(*sampler, family.at(u), {}, extrema.get()).value;
  };
  return pf;
}

}  // namespace nevpull
