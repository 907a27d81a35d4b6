#include "nevpull/selfmap.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "nevpull/errors.hpp"

namespace nevpull {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

cplx blaschke_value(const AnalyticSelfMap::Blaschke& b, cplx z) {
  cplx v = b.rotation;
  for (const cplx& a : b.zeros) v *= (z - a) / (1.0 - std::conj(a) * z);
  return v;
}

cplx blaschke_derivative(const AnalyticSelfMap::Blaschke& b, cplx z) {
  // product rule over the factors; degrees here are small
  const std::size_t d = b.zeros.size();
  std::vector<cplx> f(d), df(d);
  for (std::size_t k = 0; k < d; ++k) {
    const cplx a = b.zeros[k];
    const cplx den = 1.0 - std::conj(a) * z;
    f[k] = (z - a) / den;
    df[k] = (1.0 - std::norm(a)) / (den * den);
  }
  cplx total{0.0, 0.0};
  for (std::size_t k = 0; k < d; ++k) {
    cplx term = df[k];
    for (std::size_t j = 0; j < d; ++j)
      if (j != k) term *= f[j];
    total += term;
  }
  return b.rotation * total;
}

cplx singular_value(const AnalyticSelfMap::AtomicSingular& s, cplx z) {
  return std::exp(-s.mass * (s.atom + z) / (s.atom - z));
}

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_complex(cplx c) {
  if (c.imag() == 0.0) return format_real(c.real());
  std::string s = format_real(c.real());
  if (c.imag() >= 0.0) s += "+";
  s += format_real(c.imag()) + "i";
  return s;
}

}  // namespace

AnalyticSelfMap AnalyticSelfMap::blaschke(std::vector<cplx> zeros, cplx rotation) {
  if (zeros.empty()) throw DomainError("a Blaschke product needs at least one zero");
  for (const cplx& a : zeros)
    if (!(std::abs(a) < 1.0)) throw DomainError("Blaschke zero outside the open unit disk");
  if (std::abs(std::abs(rotation) - 1.0) > 1e-12) throw DomainError("rotation factor must be unimodular");
  return AnalyticSelfMap(Blaschke{std::move(zeros), rotation});
}

AnalyticSelfMap AnalyticSelfMap::scaled(double t, AnalyticSelfMap inner) {
  if (!(t > 0.0 && t <= 1.0)) throw DomainError("scale factor must lie in (0, 1]");
  return AnalyticSelfMap(Scaled{std::make_shared<const AnalyticSelfMap>(std::move(inner)), t});
}

AnalyticSelfMap AnalyticSelfMap::atomic_singular(double mass, cplx atom) {
  if (!(mass > 0.0)) throw DomainError("singular mass must be positive");
  if (std::abs(std::abs(atom) - 1.0) > 1e-12) throw DomainError("singular atom must lie on the unit circle");
  return AnalyticSelfMap(AtomicSingular{mass, atom / std::abs(atom)});
}

cplx AnalyticSelfMap::evaluate(cplx z) const {
  if (!(std::abs(z) < 1.0)) throw DomainError("evaluate: |z| must be < 1");
  return std::visit(overloaded{
                        [&](const Blaschke& b) { return blaschke_value(b, z); },
                        [&](const Scaled& s) { return s.t * s.inner->evaluate(z); },
                        [&](const AtomicSingular& s) { return singular_value(s, z); },
                    },
                    rep_);
}

cplx AnalyticSelfMap::derivative(cplx z) const {
  if (!(std::abs(z) < 1.0)) throw DomainError("derivative: |z| must be < 1");
  return std::visit(overloaded{
                        [&](const Blaschke& b) { return blaschke_derivative(b, z); },
                        [&](const Scaled& s) { return s.t * s.inner->derivative(z); },
                        [&](const AtomicSingular& s) {
                          const cplx den = s.atom - z;
                          return singular_value(s, z) * (-s.mass) * 2.0 * s.atom / (den * den);
                        },
                    },
                    rep_);
}

cplx AnalyticSelfMap::boundary_value(double theta) const {
  return std::visit(overloaded{
                        [&](const Blaschke& b) { return blaschke_value(b, std::polar(1.0, theta)); },
                        [&](const Scaled& s) { return s.t * s.inner->boundary_value(theta); },
                        [&](const AtomicSingular& s) {
                          const double half = 0.5 * (theta - std::arg(s.atom));
                          const double sn = std::sin(half);
                          if (std::abs(sn) < 1e-300 || std::abs(std::polar(1.0, theta) - s.atom) == 0.0)
                            throw SingularPointError("boundary_value: evaluation at the singular atom");
                          const double cot = std::cos(half) / sn;
                          return std::polar(1.0, -s.mass * cot);
                        },
                    },
                    rep_);
}

std::vector<Preimage> AnalyticSelfMap::preimages(cplx a) const {
  if (!(std::abs(a) < 1.0)) throw DomainError("preimages: target must lie in the open disk");
  return std::visit(
      overloaded{
          [&](const Blaschke& b) {
            // rot * prod (z - a_k) - a * prod (1 - conj(a_k) z) = 0
            std::vector<cplx> num{b.rotation};
            std::vector<cplx> den{cplx{1.0, 0.0}};
            for (const cplx& zk : b.zeros) {
              std::vector<cplx> nn(num.size() + 1), dd(den.size() + 1);
              for (std::size_t i = 0; i < num.size(); ++i) {
                nn[i] += -zk * num[i];
                nn[i + 1] += num[i];
              }
              for (std::size_t i = 0; i < den.size(); ++i) {
                dd[i] += den[i];
                dd[i + 1] += -std::conj(zk) * den[i];
              }
              num = std::move(nn);
              den = std::move(dd);
            }
            std::vector<cplx> poly(num.size());
            for (std::size_t i = 0; i < num.size(); ++i) poly[i] = num[i] - a * den[i];
            std::vector<cplx> roots = polynomial_roots(poly);

            // damped Newton polish on phi(z) - a
            for (cplx& z : roots) {
              for (int it = 0; it < 5; ++it) {
                const cplx r = blaschke_value(b, z) - a;
                if (std::abs(r) < 1e-16) break;
                const cplx d = blaschke_derivative(b, z);
                if (std::abs(d) < 1e-300) break;
                cplx step = r / d;
                double lambda = 1.0;
                while (lambda > 1e-3) {
                  const cplx cand = z - lambda * step;
                  if (std::abs(blaschke_value(b, cand) - a) < std::abs(r)) {
                    z = cand;
                    break;
                  }
                  lambda *= 0.5;
                }
                if (lambda <= 1e-3) break;
              }
            }

            // merge coincident roots
            std::vector<Preimage> merged;
            for (const cplx& z : roots) {
              auto it = std::find_if(merged.begin(), merged.end(),
                                     [&](const Preimage& p) { return std::abs(p.point - z) < 1e-8; });
              if (it != merged.end()) {
                it->point = (it->point * double(it->multiplicity) + z) / double(it->multiplicity + 1);
                ++it->multiplicity;
              } else {
                merged.push_back({z, 1});
              }
            }

            std::vector<Preimage> inside;
            for (const Preimage& p : merged) {
              if (std::abs(p.point) >= 1.0 - 1e-12) continue;
              if (std::abs(blaschke_value(b, p.point) - a) > 1e-12)
                throw NumericalError("preimages: root polishing did not reach 1e-12");
              inside.push_back(p);
            }
            std::sort(inside.begin(), inside.end(), [](const Preimage& l, const Preimage& r) {
              if (l.point.real() != r.point.real()) return l.point.real() > r.point.real();
              return l.point.imag() > r.point.imag();
            });
            return inside;
          },
          [&](const Scaled& s) {
            if (std::abs(a) >= s.t) return std::vector<Preimage>{};
            return s.inner->preimages(a / s.t);
          },
          [&](const AtomicSingular&) -> std::vector<Preimage> {
            throw UnsupportedMapError("preimages: atomic singular inner functions have infinitely many preimages");
          },
      },
      rep_);
}

bool AnalyticSelfMap::is_rational() const {
  return std::visit(overloaded{
                        [](const Blaschke&) { return true; },
                        [](const Scaled& s) { return s.inner->is_rational(); },
                        [](const AtomicSingular&) { return false; },
                    },
                    rep_);
}

bool AnalyticSelfMap::is_inner() const {
  return std::visit(overloaded{
                        [](const Blaschke&) { return true; },
                        [](const Scaled& s) { return s.t == 1.0 && s.inner->is_inner(); },
                        [](const AtomicSingular&) { return true; },
                    },
                    rep_);
}

int AnalyticSelfMap::degree() const {
  return std::visit(overloaded{
                        [](const Blaschke& b) { return int(b.zeros.size()); },
                        [](const Scaled& s) { return s.inner->degree(); },
                        [](const AtomicSingular&) { return 0; },
                    },
                    rep_);
}

std::vector<double> AnalyticSelfMap::kink_radii() const {
  return std::visit(overloaded{
                        [](const Blaschke&) { return std::vector<double>{}; },
                        [](const Scaled& s) {
                          std::vector<double> out;
                          for (double r : s.inner->kink_radii()) out.push_back(s.t * r);
                          if (s.t < 1.0 && s.inner->is_inner()) out.push_back(s.t);
                          std::sort(out.begin(), out.end());
                          return out;
                        },
                        [](const AtomicSingular&) { return std::vector<double>{}; },
                    },
                    rep_);
}

std::optional<double> AnalyticSelfMap::singular_angle() const {
  return std::visit(overloaded{
                        [](const Blaschke&) -> std::optional<double> { return std::nullopt; },
                        [](const Scaled& s) { return s.inner->singular_angle(); },
                        [](const AtomicSingular& s) -> std::optional<double> { return std::arg(s.atom); },
                    },
                    rep_);
}

BoundaryChart AnalyticSelfMap::boundary_chart() const {
  double scale = 1.0;
  const AnalyticSelfMap* m = this;
  while (const auto* s = std::get_if<Scaled>(&m->rep_)) {
    scale *= s->t;
    m = s->inner.get();
  }
  if (const auto* sing = std::get_if<AtomicSingular>(&m->rep_))
    return BoundaryChart::wrapped_cauchy(std::exp(-sing->mass), scale);
  return BoundaryChart::uniform(std::make_shared<const AnalyticSelfMap>(*this));
}

std::string AnalyticSelfMap::render() const {
  return std::visit(overloaded{
                        [](const Blaschke& b) {
                          std::string s = "blaschke(zeros=[";
                          for (std::size_t k = 0; k < b.zeros.size(); ++k) {
                            if (k) s += ", ";
                            s += format_complex(b.zeros[k]);
                          }
                          return s + "], rot=" + format_complex(b.rotation) + ")";
                        },
                        [](const Scaled& s) { return "scale(" + format_real(s.t) + ", " + s.inner->render() + ")"; },
                        [](const AtomicSingular& s) {
                          return "singular(c=" + format_real(s.mass) + ", xi=" + format_complex(s.atom) + ")";
                        },
                    },
                    rep_);
}

// ---------------------------------------------------------------------------

BoundaryChart BoundaryChart::uniform(std::shared_ptr<const AnalyticSelfMap> map) {
  BoundaryChart c;
  c.kind_ = Kind::uniform_angle;
  c.map_ = std::move(map);
  return c;
}

BoundaryChart BoundaryChart::wrapped_cauchy(double r, double scale) {
  BoundaryChart c;
  c.kind_ = Kind::wrapped_cauchy;
  c.r_ = r;
  c.scale_ = scale;
  return c;
}

cplx BoundaryChart::value(double s) const {
  if (kind_ == Kind::uniform_angle) return map_->boundary_value(s);
  return std::polar(scale_, -s);
}

double BoundaryChart::density(double s) const {
  if (kind_ == Kind::uniform_angle) return 1.0 / kTwoPi;
  const double r = r_;
  return (1.0 - r * r) / (kTwoPi * (1.0 - 2.0 * r * std::cos(s) + r * r));
}

double BoundaryChart::cumulative(double s) const {
  if (kind_ == Kind::uniform_angle) return s / kTwoPi;
  const double r = r_;
  const double half = 0.5 * s;
  return std::atan2((1.0 + r) * std::sin(half), (1.0 - r) * std::cos(half)) / kPi;
}

double pseudo_hyperbolic(cplx z, cplx w) { return std::abs(z - w) / std::abs(1.0 - std::conj(w) * z); }

}  // namespace nevpull
