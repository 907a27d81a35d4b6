#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "nevpull/geometry.hpp"
#include "nevpull/kernels.hpp"

namespace nevpull {

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t panels_used = 0;
  bool converged = true;
};

struct QuadOptions {
  double abs_tol = 1e-10;
  double rel_tol = 0.0;
  std::size_t max_panels = 1'000'000;
  /// Integrable singularities: the interval is split there and a geometric
  /// cascade of panels is laid down on both sides.
  std::vector<double> singular_points;
  /// Plain split points (kinks, jumps).
  std::vector<double> breakpoints;
  bool singular_lo = false;
  bool singular_hi = false;
  /// Panels used before any adaptive refinement, per split interval.
  int initial_panels = 1;
  /// Throw QuadratureError instead of returning an unconverged result.
  bool strict = false;
  Exec exec = Exec::parallel;
};

using RealFn = std::function<double(double)>;
using PlaneFn = std::function<double(cplx)>;

/// Adaptive Gauss-Kronrod (7/15) quadrature on [a, b].
///
/// Refinement proceeds in rounds: every round bisects the panels with the
/// largest error estimates and evaluates all new nodes as one batch (in
/// parallel under Exec::parallel). The final value is summed in panel order,
/// so serial and parallel runs agree bit for bit.
QuadResult integrate_interval(const RealFn& f, double a, double b, const QuadOptions& opt = {});

/// Batch form: f fills y[i] = integrand(x[i]).
using BatchFn = std::function<void(std::span<const double> x, std::span<double> y)>;
QuadResult integrate_interval_batch(const BatchFn& f, double a, double b, const QuadOptions& opt = {});

/// Known irregularities of a planar integrand.
struct PlaneSingularities {
  std::vector<cplx> points;        // integrable point singularities (log type)
  std::vector<double> kink_radii;  // circles |w| = rho across which f is only continuous
};

/// Line integral of f against arc length.
QuadResult integrate_curve(const PlaneFn& f, const CircularArcCurve& curve, const QuadOptions& opt = {},
                           const PlaneSingularities& sing = {});

struct Quad2DOptions {
  QuadOptions outer;
  QuadOptions inner;
  PlaneSingularities sing;

  Quad2DOptions();
};

/// Integral of f over S(zeta, h) against dv = dA/pi, in polar coordinates
/// centred at zeta (radial variable outside, angular variable inside).
QuadResult integrate_window_2d(const PlaneFn& f, const WindowS& window, const Quad2DOptions& opt = {});

/// Integral of f over the disk D(0, r), r <= 1, against dv = dA/pi.
QuadResult integrate_disk_2d(const PlaneFn& f, double r, const Quad2DOptions& opt = {});

/// A function u -> mu(u) evaluated on demand, with its known jump and kink
/// locations.
struct ProfileFunction {
  RealFn mu;
  std::vector<double> breakpoints;
  /// Points where mu has unbounded derivative (square-root onsets at critical
  /// values); the quadrature cascades toward them.
  std::vector<double> singular_points;
};

/// Integral of weight(u) * mu(u) over [lo, hi]; panels are split at the
/// profile breakpoints and cascaded toward lo (where a 1/u weight is tamed by
/// mu vanishing).
QuadResult integrate_profile(const RealFn& weight, const ProfileFunction& profile, double lo, double hi,
                             const QuadOptions& opt = {});

/// Minimiser of a unimodal g on [lo, hi] by golden-section search.
double golden_section_min(const RealFn& g, double lo, double hi, double tol = 1e-15);

/// Normalised area v(S(zeta, h)) of a window (closed form of the lens area).
double window_area(double h);

}  // namespace nevpull
