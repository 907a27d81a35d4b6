#include "nevpull/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "nevpull/errors.hpp"
#include "nevpull/quad.hpp"

namespace nevpull {

namespace {

double into_range(double a, double lo) {
  double x = std::fmod(a - lo, kTwoPi);
  if (x < 0.0) x += kTwoPi;
  return lo + x;
}

constexpr int kScan = 64;

}  // namespace

double wrap_angle(double a) {
  double x = std::fmod(a + kPi, kTwoPi);
  if (x <= 0.0) x += kTwoPi;
  return x - kPi;
}

BoundaryArc BoundaryArc::from_endpoints(double theta_start, double theta_end) {
  double len = into_range(theta_end - theta_start, 0.0);
  if (len == 0.0) len = kTwoPi;
  return {wrap_angle(theta_start + 0.5 * len), 0.5 * len};
}

bool BoundaryArc::contains_angle(double theta) const { return inside_margin(theta) >= -1e-15; }

double BoundaryArc::inside_margin(double theta) const {
  return half_length - std::abs(wrap_angle(theta - center_angle));
}

CircularArcCurve CircularArcCurve::circle(cplx center, double radius, double start_angle, double sweep) {
  CircularArcCurve c;
  c.kind = Kind::circle_arc;
  c.center = center;
  c.radius = radius;
  c.start_angle = start_angle;
  c.sweep = sweep;
  c.length = radius * std::abs(sweep);
  c.start = center + std::polar(radius, start_angle);
  c.end = c.point(c.length);
  return c;
}

CircularArcCurve CircularArcCurve::segment(cplx from, cplx to) {
  CircularArcCurve c;
  c.kind = Kind::line_segment;
  c.start = from;
  c.end = to;
  c.length = std::abs(to - from);
  return c;
}

cplx CircularArcCurve::point(double s) const {
  switch (kind) {
    case Kind::circle_arc: {
      // start + R e^{i a0} (e^{ix} - 1), written so that nearly straight arcs
      // (huge R) lose no precision
      const double x = (sweep >= 0.0 ? s : -s) / radius;
      const double sh = std::sin(0.5 * x);
      return start + std::polar(radius, start_angle) * cplx{-2.0 * sh * sh, std::sin(x)};
    }
    case Kind::line_segment:
      return start + (end - start) * (s / length);
    case Kind::empty:
      break;
  }
  throw DomainError("point: empty curve");
}

std::vector<double> CircularArcCurve::params_at_radius(double rho) const {
  std::vector<double> out;
  if (empty() || length <= 0.0) return out;
  auto g = [&](double s) { return std::abs(point(s)) - rho; };
  // |z(s)| - rho has at most two roots along a circle or line: bracket on a
  // scan, then bisect
  double s0 = 0.0, g0 = g(0.0);
  for (int k = 1; k <= kScan; ++k) {
    const double s1 = length * k / kScan, g1 = g(s1);
    if ((g0 < 0.0) != (g1 < 0.0)) {
      double lo = s0, hi = s1;
      const bool neg_lo = g0 < 0.0;
      for (int it = 0; it < 200 && hi - lo > 1e-15 * length; ++it) {
        const double mid = 0.5 * (lo + hi);
        if ((g(mid) < 0.0) == neg_lo)
          lo = mid;
        else
          hi = mid;
      }
      const double s = 0.5 * (lo + hi);
      if (s > 1e-14 * length && s < length * (1.0 - 1e-14)) out.push_back(s);
    }
    s0 = s1;
    g0 = g1;
  }
  // a tangential touch produces no sign change but still a kink location
  for (int k = 0; k < kScan; ++k) {
    const double lo = length * k / kScan, hi = length * (k + 1) / kScan;
    const double s = golden_section_min([&](double x) { return std::abs(g(x)); }, lo, hi, 1e-14 * length);
    if (std::abs(g(s)) < 1e-13 && s > 1e-14 * length && s < length * (1.0 - 1e-14) &&
        std::none_of(out.begin(), out.end(), [&](double t) { return std::abs(t - s) < 1e-9 * length; }))
      out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<double> CircularArcCurve::param_near(cplx p, double tol) const {
  if (empty() || length <= 0.0) return std::nullopt;
  auto dist = [&](double s) { return std::abs(point(s) - p); };
  double best_s = 0.0, best = dist(0.0);
  for (int k = 1; k <= kScan; ++k) {
    const double s = length * k / kScan, d = dist(s);
    if (d < best) best = d, best_s = s;
  }
  const double step = length / kScan;
  const double s = golden_section_min(dist, std::max(0.0, best_s - step), std::min(length, best_s + step),
                                      1e-15 * length);
  if (dist(s) > tol) return std::nullopt;
  return s;
}

}  // namespace nevpull
