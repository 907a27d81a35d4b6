#pragma once

// Helpers shared by the identity checks.

#include <chrono>
#include <string>

#include "nevpull/identities.hpp"
#include "nevpull/nevanlinna.hpp"
#include "nevpull/pullback.hpp"
#include "nevpull/quad.hpp"

namespace nevpull::detail {

std::string fmt(double x);
std::string fmt(cplx z);

/// Throws HypothesisError with the message when cond is false.
void require(bool cond, const std::string& what);

/// Singular point phi(0) and the kink radii of N_phi.
PlaneSingularities counting_singularities(const AnalyticSelfMap& map);
Quad2DOptions plane_options(const AnalyticSelfMap& map);

/// Short description of how N_phi is evaluated for this map.
std::string counting_route(const AnalyticSelfMap& map);

QuadOptions curve_options();
QuadOptions profile_options();

void finish_equality(CheckResult& r, double lhs, double rhs, double tol);
void finish_inequality(CheckResult& r, double lhs, double rhs, double slack, bool strict);

class Stopwatch {
public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
  }

private:
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

/// Integral of N/(1-|z|^2) over the level curve L_F(alpha).
QuadResult level_curve_integral(const AnalyticSelfMap& map, const CountingFunction& n, const BoundaryArc& arc,
                                double alpha);

}  // namespace nevpull::detail

namespace nevpull::detail {

/// Mean of N over the circle |z| = t, by quadrature along the circle.
double circle_average(const AnalyticSelfMap& map, const CountingFunction& n, double t);

/// sigma of the boundary window {|e^{i theta} - zeta| <= u}, integrated over u in [0, h].
double window_sigma_integral(double h);

std::shared_ptr<const BoundarySampler> make_sampler(const AnalyticSelfMap& map);

}  // namespace nevpull::detail
