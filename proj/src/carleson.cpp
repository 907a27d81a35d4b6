#include "nevpull/carleson.hpp"

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

// Rotation taking the arc's centre to i, and the resulting theta0 (the arc
// becomes {theta0 < theta < pi - theta0}).
struct SymmetricFrame {
  cplx rot;
  double theta0;
};

SymmetricFrame frame_of(const BoundaryArc& arc) {
  return {std::polar(1.0, kPi / 2 - arc.center_angle), kPi / 2 - arc.half_length};
}

}  // namespace

// --- harmonic measure -------------------------------------------------------

double harmonic_measure(const BoundaryArc& arc, cplx z) {
  if (!(std::abs(z) < 1.0)) throw DomainError("harmonic_measure: |z| must be < 1");
  const auto [rot, theta0] = frame_of(arc);
  const cplx zr = rot * z;
  const cplx ratio = (-std::polar(1.0, -theta0) - zr) / (std::polar(1.0, theta0) - zr);
  double a = std::arg(ratio);
  if (a <= 0.0) a += kTwoPi;
  return a / kPi + theta0 / kPi - 0.5;
}

double harmonic_measure_poisson(const BoundaryArc& arc, cplx z, double tol) {
  if (!(std::abs(z) < 1.0)) throw DomainError("harmonic_measure_poisson: |z| must be < 1");
  const double r2 = std::norm(z);
  QuadOptions opt;
  opt.abs_tol = tol;
  opt.exec = Exec::serial;
  opt.initial_panels = 4;
  const double lo = arc.center_angle - arc.half_length, hi = arc.center_angle + arc.half_length;
  if (std::abs(z) > 0.0) opt.breakpoints.push_back(into_range(std::arg(z), lo));
  const QuadResult r = integrate_interval(
      [&](double th) { return (1.0 - r2) / std::norm(std::polar(1.0, th) - z) / kTwoPi; }, lo, hi, opt);
  return r.value;
}

GradientModulus harmonic_measure_gradient_modulus(const BoundaryArc& arc, cplx z) {
  if (!(std::abs(z) < 1.0)) throw DomainError("gradient: |z| must be < 1");
  const auto [rot, theta0] = frame_of(arc);
  const cplx zr = rot * z;
  GradientModulus g{};
  g.closed_form =
      std::cos(theta0) / (kPi * std::abs(std::polar(1.0, theta0) - zr) * std::abs(std::polar(1.0, -theta0) + zr));
  g.alpha = harmonic_measure(arc, z);
  g.level_form = std::sin(kPi * g.alpha) / (kPi * (1.0 - std::norm(z)));
  return g;
}

CircularArcCurve level_curve(const BoundaryArc& arc, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("level_curve: alpha must lie in (0, 1)");
  const auto [rot, theta0] = frame_of(arc);
  const cplx back = std::conj(rot);
  const double back_angle = std::arg(back);
  const cplx e1 = std::polar(1.0, theta0), e2 = -std::polar(1.0, -theta0);
  // inscribed angle of the chord seen from the level set
  const double big_theta = kPi * alpha + kPi / 2 - theta0;
  if (std::abs(big_theta - kPi) < 1e-13) return CircularArcCurve::segment(back * e1, back * e2);

  const double y = std::sin(theta0) - std::cos(theta0) / std::tan(0.5 * big_theta);
  const double yc = (1.0 - y * y) / (2.0 * (std::sin(theta0) - y));
  const cplx centre{0.0, yc};
  const double radius = std::abs(y - yc);
  const double a1 = std::arg(e1 - centre), a2 = std::arg(e2 - centre);
  const double apex = std::arg(cplx{0.0, y} - centre);
  const double ccw = into_range(a2 - a1, 0.0);
  const double sweep = into_range(apex - a1, 0.0) < ccw ? ccw : ccw - kTwoPi;
  CircularArcCurve c = CircularArcCurve::circle(back * centre, radius, a1 + back_angle, sweep);
  // exact endpoints: the centre is far away when alpha is close to the chord level
  c.start = back * e1;
  c.end = back * e2;
  return c;
}

// --- linear fractional level sets --------------------------------------------

void LinearFractional::validate() const {
  if (std::abs(a * d - b * c - 1.0) > 1e-10) throw DomainError("linear fractional map must satisfy ad - bc = 1");
  if (!(std::abs(d) > std::abs(c))) throw DomainError("linear fractional map must be bounded on the closed disk");
}

double LinearFractional::sup_on_disk() const {
  // |f| is maximal on the circle, whose image is the circle through three image points
  const cplx p = (*this)(1.0), q = (*this)(cplx{0.0, 1.0}), r = (*this)(-1.0);
  const cplx num = std::norm(p) * (q - r) + std::norm(q) * (r - p) + std::norm(r) * (p - q);
  const cplx den = std::conj(p) * (q - r) + std::conj(q) * (r - p) + std::conj(r) * (p - q);
  if (std::abs(den) < 1e-300) return std::max({std::abs(p), std::abs(q), std::abs(r)});
  const cplx centre = num / den;
  return std::abs(centre) + std::abs(p - centre);
}

CircularArcCurve lft_level_set(const LinearFractional& f, double t) {
  if (!(t > 0.0)) throw DomainError("lft_level_set: t must be positive");
  f.validate();
  const double t2 = t * t;
  const double A = std::norm(f.a) - t2 * std::norm(f.c);
  const cplx B = f.a * std::conj(f.b) - t2 * f.c * std::conj(f.d);
  const double C = std::norm(f.b) - t2 * std::norm(f.d);
  const double scale = std::max({std::abs(A), std::abs(B), std::abs(C), 1e-300});

  if (std::abs(A) < 1e-14 * scale) {
    // line 2 Re(B z) + C = 0
    if (std::abs(B) < 1e-300) return {};
    const cplx z0 = -C * std::conj(B) / (2.0 * std::norm(B));
    const cplx dir = cplx{0.0, 1.0} * std::conj(B) / std::abs(B);
    const double bq = (std::conj(z0) * dir).real();
    const double disc = bq * bq - (std::norm(z0) - 1.0);
    if (disc <= 0.0) return {};
    const double sq = std::sqrt(disc);
    return CircularArcCurve::segment(z0 + dir * (-bq - sq), z0 + dir * (-bq + sq));
  }

  const cplx centre = -std::conj(B) / A;
  const double r2 = std::norm(B) / (A * A) - C / A;
  if (!(r2 > 0.0)) return {};
  const double radius = std::sqrt(r2);
  const double cabs = std::abs(centre);
  if (cabs + radius < 1.0) return CircularArcCurve::circle(centre, radius, 0.0, kTwoPi);
  if (cabs - radius >= 1.0 || radius - cabs >= 1.0 || cabs == 0.0) return {};
  // arc of the circle inside the disk: cos(psi - arg c) < (1 - |c|^2 - R^2)/(2 R |c|)
  const double cv = (1.0 - cabs * cabs - radius * radius) / (2.0 * radius * cabs);
  if (cv <= -1.0) return {};
  if (cv >= 1.0) return CircularArcCurve::circle(centre, radius, 0.0, kTwoPi);
  const double off = std::acos(cv);
  return CircularArcCurve::circle(centre, radius, std::arg(centre) + off, kTwoPi - 2.0 * off);
}

// --- windows -----------------------------------------------------------------

BoundaryArc window_arc(const WindowS& window) {
  if (!(window.h > 0.0 && window.h <= 2.0)) throw DomainError("window_arc: h must lie in (0, 2]");
  return {std::arg(window.zeta), 2.0 * std::asin(0.5 * window.h)};
}

double window_alpha(const WindowS& window) {
  if (!(window.h > 0.0 && window.h < 2.0)) throw DomainError("window_alpha: h must lie in (0, 2)");
  return std::acos(0.5 * window.h) / kPi;
}

}  // namespace nevpull
