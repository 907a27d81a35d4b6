#include "nevpull/nevanlinna.hpp"

#include <cmath>
#include <limits>

#include "nevpull/errors.hpp"
#include "nevpull/quad.hpp"

namespace nevpull {

const char* to_string(CountingValue::Method m) {
  switch (m) {
    case CountingValue::Method::roots:
      return "roots";
    case CountingValue::Method::boundary_integral:
      return "boundary_integral";
    case CountingValue::Method::both:
      return "both";
  }
  return "?";
}

namespace {

void require_disk(cplx a, const char* who) {
  if (!(std::abs(a) < 1.0)) throw DomainError(std::string(who) + ": |a| must be < 1");
}

}  // namespace

CountingValue counting_roots(const AnalyticSelfMap& map, cplx a) {
  require_disk(a, "counting_roots");
  if (!map.is_rational()) throw UnsupportedMapError("counting_roots: the map is not rational");
  CountingValue out;
  out.method = CountingValue::Method::roots;
  double sum = 0.0;
  for (const Preimage& p : map.preimages(a)) {
    const double r = std::abs(p.point);
    if (r == 0.0) {
      out.value = std::numeric_limits<double>::infinity();
      return out;
    }
    sum -= p.multiplicity * std::log(r);
  }
  out.value = sum;
  return out;
}

CountingValue counting_integral(const AnalyticSelfMap& map, cplx a, double tol) {
  require_disk(a, "counting_integral");
  const cplx p0 = map.origin_image();
  if (std::abs(a - p0) < 1e-14) throw SingularPointError("counting_integral: a equals phi(0)");
  const BoundaryChart chart = map.boundary_chart();

  auto dist = [&](double s) { return std::abs(a - chart.value(s)); };

  // Locate near-zeros of |a - w(s)|: the integrand has log singularities there.
  QuadOptions opt;
  opt.abs_tol = 0.25 * tol;
  opt.initial_panels = 32;
  constexpr int kScan = 256;
  const double step = kTwoPi / kScan;
  std::vector<double> d(kScan);
  for (int i = 0; i < kScan; ++i) d[i] = dist(i * step);
  for (int i = 0; i < kScan; ++i) {
    const double prev = d[(i + kScan - 1) % kScan], next = d[(i + 1) % kScan];
    if (!(d[i] <= prev && d[i] <= next) || d[i] > 0.05) continue;
    double s = golden_section_min(dist, (i - 1) * step, (i + 1) * step);
    s = std::fmod(s + kTwoPi, kTwoPi);
    const bool singular = dist(s) < 1e-8;
    if (s < 1e-13 || kTwoPi - s < 1e-13) {
      if (singular) opt.singular_lo = opt.singular_hi = true;
      continue;
    }
    (singular ? opt.singular_points : opt.breakpoints).push_back(s);
  }
  if (chart.kind() == BoundaryChart::Kind::wrapped_cauchy) opt.breakpoints.push_back(kPi);

  const QuadResult r = integrate_interval(
      [&](double s) {
        const double dd = dist(s);
        return dd > 0.0 ? std::log(dd) * chart.density(s) : 0.0;
      },
      0.0, kTwoPi, opt);
  if (!r.converged && r.error_estimate > tol)
    throw QuadratureError("counting_integral: error estimate " + std::to_string(r.error_estimate) +
                          " exceeds tolerance");
  CountingValue out;
  out.method = CountingValue::Method::boundary_integral;
  out.value = -std::log(std::abs(a - p0)) + r.value;
  out.estimated_error = r.error_estimate;
  return out;
}

CountingValue counting(const AnalyticSelfMap& map, cplx a) {
  if (!map.is_rational()) return counting_integral(map, a);
  CountingValue roots = counting_roots(map, a);
  try {
    const CountingValue integral = counting_integral(map, a);
    roots.method = CountingValue::Method::both;
    roots.estimated_error = std::isfinite(roots.value) ? std::abs(roots.value - integral.value) : 0.0;
  } catch (const SingularPointError&) {
    // a = phi(0): only the preimage sum is defined
  }
  return roots;
}

double counting_poisson_closed_form(double t, double p, cplx a) {
  const double at = std::abs(a);
  // harmonic extension to p of zeta -> log|a - t zeta|
  const double boundary = at < t ? std::log(t) + std::log(std::abs(1.0 - std::conj(a / t) * p))
                                 : std::log(at) + std::log(std::abs(1.0 - t * p / a));
  return -std::log(std::abs(a - t * p)) + boundary;
}

CountingFunction::CountingFunction(const AnalyticSelfMap& map)
    : map_(std::make_shared<const AnalyticSelfMap>(map)), rational_(map.is_rational()) {
  if (!rational_) {
    const BoundaryChart chart = map.boundary_chart();
    if (chart.kind() != BoundaryChart::Kind::wrapped_cauchy)
      throw UnsupportedMapError("CountingFunction: unsupported map family");
    scale_ = chart.scale();
    poisson_ = chart.poisson_radius();
  }
}

double CountingFunction::operator()(cplx a) const {
  if (rational_) return counting_roots(*map_, a).value;
  if (std::abs(a - scale_ * poisson_) == 0.0) return std::numeric_limits<double>::infinity();
  return counting_poisson_closed_form(scale_, poisson_, a);
}

}  // namespace nevpull
