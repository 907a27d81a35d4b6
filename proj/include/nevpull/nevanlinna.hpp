#pragma once

// Nevanlinna counting function N_phi(a) = sum over phi(z) = a of log(1/|z|).

#include <memory>

#include "nevpull/selfmap.hpp"

namespace nevpull {

struct CountingValue {
  enum class Method { roots, boundary_integral, both };

  double value = 0.0;
  Method method = Method::roots;
  double estimated_error = 0.0;
};

const char* to_string(CountingValue::Method m);

/// Sum of -log|z| over the disk preimages of a, with multiplicity. Zero when
/// a is not attained; +infinity when a = phi(0) = 0 is attained at the origin.
/// Rational maps only.
CountingValue counting_roots(const AnalyticSelfMap& map, cplx a);

/// The boundary representation
///   -log|a - phi(0)| + integral of log|a - phi*| d sigma,
/// by adaptive quadrature over the map's boundary chart. Throws
/// SingularPointError when a = phi(0), QuadratureError if tol is not met.
CountingValue counting_integral(const AnalyticSelfMap& map, cplx a, double tol = 1e-9);

/// Both methods for rational maps (roots value, discrepancy as the error);
/// the boundary integral otherwise.
CountingValue counting(const AnalyticSelfMap& map, cplx a);

/// Cheap evaluator of the counting function for use as a quadrature
/// integrand.
///
/// Rational maps use the preimage sum. For scaled singular inner maps the
/// boundary push-forward is a Poisson measure, so the boundary integral is
/// evaluated exactly through the harmonic extension of log|a - t zeta|.
class CountingFunction {
public:
  explicit CountingFunction(const AnalyticSelfMap& map);

  double operator()(cplx a) const;
  const AnalyticSelfMap& map() const noexcept { return *map_; }

private:
  std::shared_ptr<const AnalyticSelfMap> map_;
  bool rational_ = true;
  double scale_ = 1.0;   // t in t * (inner singular map)
  double poisson_ = 0.0; // phi(0) of the inner singular map (real, positive)
};

/// Closed form used by CountingFunction for t * S with S singular inner.
double counting_poisson_closed_form(double t, double p, cplx a);

}  // namespace nevpull
