#pragma once

// Value types shared by the carleson, quad and pullback modules.

#include <cmath>
#include <optional>
#include <vector>

#include "nevpull/selfmap.hpp"

namespace nevpull {

/// Wraps an angle into (-pi, pi].
double wrap_angle(double a);

/// Arc of the unit circle, stored by centre angle and half length so that
/// wrap-around at +-pi needs no special casing.
struct BoundaryArc {
  double center_angle = 0.0;
  double half_length = kPi / 2;

  static BoundaryArc from_endpoints(double theta_start, double theta_end);
  static BoundaryArc upper_half() { return {kPi / 2, kPi / 2}; }

  /// Normalised measure d theta / 2pi of the arc.
  double sigma() const { return half_length / kPi; }
  cplx start() const { return std::polar(1.0, center_angle - half_length); }
  cplx end() const { return std::polar(1.0, center_angle + half_length); }
  /// Closed-arc membership of the angle.
  bool contains_angle(double theta) const;
  /// Signed angular distance to the arc boundary (positive inside).
  double inside_margin(double theta) const;
};

/// Carleson window S(zeta, h) = {z in D : |z - zeta| < h}; measures use the
/// closed condition |z - zeta| <= h.
struct WindowS {
  cplx zeta{1.0, 0.0};
  double h = 0.5;

  bool contains_closed(cplx z) const { return std::abs(z - zeta) <= h; }
};

/// Window G_F(alpha) = {chi_F >= alpha}.
struct WindowG {
  BoundaryArc arc;
  double alpha = 0.5;
};

/// Circle arc or line segment, parametrised by arc length on [0, length].
struct CircularArcCurve {
  enum class Kind { circle_arc, line_segment, empty };

  Kind kind = Kind::empty;
  cplx center{0.0, 0.0};  // circle_arc only
  double radius = 0.0;    // circle_arc only
  double start_angle = 0.0;
  double sweep = 0.0;  // signed angle swept from start_angle (circle_arc)
  cplx start{0.0, 0.0};
  cplx end{0.0, 0.0};
  double length = 0.0;

  static CircularArcCurve circle(cplx center, double radius, double start_angle, double sweep);
  static CircularArcCurve segment(cplx from, cplx to);

  bool empty() const { return kind == Kind::empty; }
  cplx point(double s) const;
  /// Arc-length parameters (within [0, length]) where |z(s)| = rho.
  std::vector<double> params_at_radius(double rho) const;
  /// Parameter of the closest curve point to p, when that point lies within
  /// tol of p.
  std::optional<double> param_near(cplx p, double tol) const;
  /// Apex: the curve point farthest from the chord joining the endpoints.
  cplx midpoint() const { return point(0.5 * length); }
};

}  // namespace nevpull
