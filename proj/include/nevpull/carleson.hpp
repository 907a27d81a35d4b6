#pragma once

// Geometry of boundary arcs: harmonic measure of an arc, its level curves,
// Carleson windows, and level sets of bounded linear-fractional maps.

#include "nevpull/geometry.hpp"

namespace nevpull {

/// Harmonic measure chi_F(z) of the arc F at z (|z| < 1), from the closed-form
/// argument expression evaluated in the frame where F is symmetric about the
/// imaginary axis. The branch is fixed so the value lies in (0, 1).
double harmonic_measure(const BoundaryArc& arc, cplx z);

/// Same quantity by adaptive quadrature of the Poisson kernel over F.
/// Independent of harmonic_measure; used as its cross-check.
double harmonic_measure_poisson(const BoundaryArc& arc, cplx z, double tol = 1e-13);

struct GradientModulus {
  double closed_form;  // cos(theta0) / (pi |e^{i theta0} - z| |e^{-i theta0} + z|)
  double level_form;   // sin(pi alpha) / (pi (1 - |z|^2)) with alpha = chi_F(z)
  double alpha;        // the level through z
};

/// |d chi_F / dz| at z in two forms.
GradientModulus harmonic_measure_gradient_modulus(const BoundaryArc& arc, cplx z);

/// The level curve {chi_F = alpha}: a circular arc through the endpoints of
/// F meeting the circle at angle pi (1 - alpha); the chord for the level
/// alpha = 1/2 + theta0/pi.
CircularArcCurve level_curve(const BoundaryArc& arc, double alpha);

/// Bounded linear-fractional map f(z) = (a z + b)/(c z + d) with ad - bc = 1.
struct LinearFractional {
  cplx a{1.0, 0.0}, b{0.0, 0.0}, c{0.0, 0.0}, d{1.0, 0.0};

  cplx operator()(cplx z) const { return (a * z + b) / (c * z + d); }
  /// Throws DomainError unless ad - bc = 1 and the pole lies off the closed disk.
  void validate() const;
  /// max |f| over the closed unit disk.
  double sup_on_disk() const;
};

/// {z in D : |f(z)| = t} as a parametrised curve (possibly empty).
CircularArcCurve lft_level_set(const LinearFractional& f, double t);

/// The arc {e^{i theta} : |e^{i theta} - zeta| <= h}; half length 2 asin(h/2).
BoundaryArc window_arc(const WindowS& window);

/// The level alpha with G_{F_h}(alpha) n D = S(zeta, h) n D, where F_h is
/// window_arc: the window's bounding circle meets the unit circle at interior
/// angle pi - acos(h/2), giving alpha = acos(h/2)/pi.
double window_alpha(const WindowS& window);

}  // namespace nevpull
