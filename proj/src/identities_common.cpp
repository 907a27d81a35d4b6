#include <cmath>
#include <cstdio>

#include "identities_internal.hpp"
#include "nevpull/errors.hpp"

namespace nevpull {

const char* to_string(CheckResult::Status s) {
  switch (s) {
    case CheckResult::Status::pass:
      return "pass";
    case CheckResult::Status::fail:
      return "fail";
    case CheckResult::Status::vacuous:
      return "vacuous";
  }
  return "?";
}

const char* to_string(CheckResult::Relation r) {
  switch (r) {
    case CheckResult::Relation::equal:
      return "=";
    case CheckResult::Relation::at_most:
      return "<=";
    case CheckResult::Relation::less_than:
      return "<";
  }
  return "?";
}

const char* to_string(CoareaFunction g) {
  switch (g) {
    case CoareaFunction::one:
      return "one";
    case CoareaFunction::half_disk_indicator:
      return "indicator_half_disk";
    case CoareaFunction::one_minus_r2:
      return "one_minus_r2";
  }
  return "?";
}

cplx Polynomial::operator()(cplx z) const {
  cplx v{0.0, 0.0};
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * z + *it;
  return v;
}

cplx Polynomial::derivative(cplx z) const {
  cplx v{0.0, 0.0};
  for (std::size_t k = coeffs.size(); k-- > 1;) v = v * z + static_cast<double>(k) * coeffs[k];
  return v;
}

std::string Polynomial::render() const {
  std::string s = "[";
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (k) s += ", ";
    s += detail::fmt(coeffs[k]);
  }
  return s + "]";
}

namespace stanton {
std::string describe(const Function& g) {
  struct V {
    std::string operator()(const Constant& c) const { return "const(" + detail::fmt(c.value) + ")"; }
    std::string operator()(const ModulusSquared&) const { return "|z|^2"; }
    std::string operator()(const PolySquared& p) const { return "|f|^2 f=" + p.f.render(); }
    std::string operator()(const LogClamp& l) const {
      return "logclamp(" + detail::fmt(l.t1) + ", " + detail::fmt(l.t2) + ")";
    }
  };
  return std::visit(V{}, g);
}
}  // namespace stanton

double average_ratio_constant(double h) {
  if (!(h > 0.0 && h < 2.0)) throw DomainError("average_ratio_constant: h must lie in (0, 2)");
  // both t-dependent factors increase with t; the scan guards that claim
  double m1 = 0.0, m3 = 0.0;
  constexpr int kScan = 1000;
  for (int k = 1; k <= kScan; ++k) {
    const double t = h * k / kScan;
    const double a = window_alpha({cplx{1.0, 0.0}, t});
    m1 = std::max(m1, 2.0 * (1.0 - a) / std::sin(kPi * a));
    m3 = std::max(m3, 2.0 * std::asin(0.5 * t) / t);
  }
  const double m2 = std::max(0.5 * h * h / window_area(h), 1.0);
  return m1 * m2 * std::max(m3, 1.0) * (1.0 + 1e-6);
}

namespace detail {

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

std::string fmt(cplx z) {
  if (z.imag() == 0.0) return fmt(z.real());
  std::string s = fmt(z.real());
  if (z.imag() >= 0.0) s += "+";
  return s + fmt(z.imag()) + "i";
}

void require(bool cond, const std::string& what) {
  if (!cond) throw HypothesisError(what);
}

PlaneSingularities counting_singularities(const AnalyticSelfMap& map) {
  PlaneSingularities s;
  s.points.push_back(map.origin_image());
  s.kink_radii = map.kink_radii();
  return s;
}

Quad2DOptions plane_options(const AnalyticSelfMap& map) {
  Quad2DOptions o;
  o.sing = counting_singularities(map);
  return o;
}

std::string counting_route(const AnalyticSelfMap& map) {
  return map.is_rational() ? "preimage sums" : "Poisson-extension closed form";
}

QuadOptions curve_options() {
  QuadOptions o;
  o.abs_tol = 1e-11;
  o.rel_tol = 1e-11;
  o.initial_panels = 8;
  return o;
}

QuadOptions profile_options() {
  QuadOptions o;
  o.abs_tol = 1e-11;
  o.rel_tol = 1e-10;
  return o;
}

void finish_equality(CheckResult& r, double lhs, double rhs, double tol) {
  r.relation = CheckResult::Relation::equal;
  r.lhs = lhs;
  r.rhs = rhs;
  r.tol = tol;
  r.abs_err = std::abs(lhs - rhs);
  r.rel_err = r.abs_err / std::max(std::abs(rhs), 1e-12);
  r.status = (r.abs_err <= tol || r.rel_err <= tol) ? CheckResult::Status::pass : CheckResult::Status::fail;
  if (lhs == 0.0 && rhs == 0.0) r.status = CheckResult::Status::vacuous;
}

void finish_inequality(CheckResult& r, double lhs, double rhs, double slack, bool strict) {
  r.relation = strict ? CheckResult::Relation::less_than : CheckResult::Relation::at_most;
  r.lhs = lhs;
  r.rhs = rhs;
  r.tol = slack;
  r.abs_err = std::max(0.0, lhs - rhs);
  r.rel_err = r.abs_err / std::max(std::abs(rhs), 1e-12);
  if (std::abs(lhs) < 1e-15 && std::abs(rhs) < 1e-15)
    r.status = CheckResult::Status::vacuous;
  else
    r.status = lhs <= rhs + slack ? CheckResult::Status::pass : CheckResult::Status::fail;
}

QuadResult level_curve_integral(const AnalyticSelfMap& map, const CountingFunction& n, const BoundaryArc& arc,
                                double alpha) {
  const CircularArcCurve curve = level_curve(arc, alpha);
  QuadOptions o = curve_options();
  o.singular_lo = o.singular_hi = true;
  return integrate_curve(
      [&](cplx z) {
        const double q = 1.0 - std::norm(z);
        return q > 0.0 ? n(z) / q : 0.0;
      },
      curve, o, counting_singularities(map));
}

}  // namespace detail
}  // namespace nevpull

namespace nevpull::detail {

double circle_average(const AnalyticSelfMap& map, const CountingFunction& n, double t) {
  PlaneSingularities sing;
  sing.points.push_back(map.origin_image());
  for (double rho : map.kink_radii())
    if (std::abs(rho - t) > 1e-12) sing.kink_radii.push_back(rho);
  QuadOptions o = curve_options();
  o.initial_panels = 16;
  const QuadResult r =
      integrate_curve([&](cplx z) { return n(z); }, CircularArcCurve::circle({0.0, 0.0}, t, 0.0, kTwoPi), o, sing);
  return r.value / (kTwoPi * t);
}

double window_sigma_integral(double h) {
  // antiderivative of (2/pi) asin(u/2)
  const double x = 0.5 * h;
  return (2.0 / kPi) * (h * std::asin(x) + 2.0 * std::sqrt(1.0 - x * x) - 2.0);
}

std::shared_ptr<const BoundarySampler> make_sampler(const AnalyticSelfMap& map) {
  return std::make_shared<const BoundarySampler>(map);
}

}  // namespace nevpull::detail
