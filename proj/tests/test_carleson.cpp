#include <cmath>

#include "doctest.h"
#include "nevpull/carleson.hpp"
#include "nevpull/errors.hpp"
#include "support.hpp"

using namespace nevpull;
using namespace testing;

namespace {
const BoundaryArc upper = BoundaryArc::upper_half();
const BoundaryArc quarter{kPi / 4, kPi / 4};
const BoundaryArc tilted{2.5, 0.4};
}  // namespace

TEST_CASE("harmonic_measure examples") {
  CHECK(near(harmonic_measure(upper, 0.0), 0.5, 1e-15));
  CHECK(near(harmonic_measure(quarter, 0.0), 0.25, 1e-15));
  CHECK(near(harmonic_measure(upper, cplx{0.0, 0.5}), 0.7951672353, 1e-10));
  CHECK_THROWS_AS(harmonic_measure(upper, 1.0), DomainError);
}

TEST_CASE("harmonic measure agrees with the Poisson quadrature") {
  for (const auto& arc : {upper, quarter, tilted, BoundaryArc{-3.0, 2.9}})
    for (cplx z : spiral(40, 0.97)) CHECK(near(harmonic_measure(arc, z), harmonic_measure_poisson(arc, z), 1e-11));
}

TEST_CASE("gradient modulus examples") {
  const auto g0 = harmonic_measure_gradient_modulus(upper, 0.0);
  CHECK(near(g0.closed_form, 1.0 / kPi, 1e-15));
  CHECK(near(g0.level_form, 1.0 / kPi, 1e-15));
  const auto g1 = harmonic_measure_gradient_modulus(upper, 0.5);
  CHECK(near(g1.closed_form, 1.0 / (kPi * 0.75), 1e-14));
  for (const auto& arc : {upper, quarter, tilted})
    for (cplx z : spiral(30, 0.95)) {
      const auto g = harmonic_measure_gradient_modulus(arc, z);
      CHECK(near(g.closed_form, g.level_form, 1e-10 * std::max(1.0, g.level_form)));
    }
}

TEST_CASE("level_curve examples") {
  const auto c = level_curve(upper, 0.5);
  CHECK(c.kind == CircularArcCurve::Kind::line_segment);
  CHECK(near(std::abs(c.start.real()), 1.0, 1e-15));
  CHECK(near(c.start + c.end, cplx{0.0, 0.0}, 1e-15));
  const auto c3 = level_curve(upper, 0.75);
  CHECK(c3.kind == CircularArcCurve::Kind::circle_arc);
  CHECK(near(c3.midpoint(), cplx{0.0, std::sqrt(2.0) - 1.0}, 1e-12));
  CHECK(near(level_curve(upper, 0.999999).midpoint(), cplx{0.0, 1.0}, 1e-5));
}

TEST_CASE("property: level consistency") {
  for (const auto& arc : {upper, quarter, tilted})
    for (double alpha : {0.05, 0.3, 0.5, 0.62, 0.9, 0.99}) {
      const auto c = level_curve(arc, alpha);
      CHECK(near(c.start, arc.start(), 1e-12));
      CHECK(near(c.end, arc.end(), 1e-12));
      for (int k = 1; k < 22; ++k) {
        const cplx p = c.point(c.length * k / 22.0);
        REQUIRE(std::abs(p) < 1.0);
        CHECK(near(harmonic_measure(arc, p), alpha, 1e-10));
      }
    }
}

TEST_CASE("property: mean value") {
  for (const auto& arc : {upper, quarter, tilted, BoundaryArc{1.0, 0.001}})
    CHECK(near(harmonic_measure(arc, 0.0), arc.sigma(), 1e-14));
}

TEST_CASE("property: Moebius invariance") {
  auto automorphism = [](cplx b, double lambda) {
    return [=](cplx z) { return std::polar(1.0, lambda) * (z - b) / (1.0 - std::conj(b) * z); };
  };
  for (cplx b : {cplx{0.3, 0.2}, cplx{-0.6, 0.1}, cplx{0.0, -0.8}})
    for (const auto& arc : {upper, quarter, tilted}) {
      const auto psi = automorphism(b, 0.7);
      const BoundaryArc image = BoundaryArc::from_endpoints(std::arg(psi(arc.start())), std::arg(psi(arc.end())));
      for (cplx z : spiral(20, 0.9)) CHECK(near(harmonic_measure(image, psi(z)), harmonic_measure(arc, z), 1e-10));
    }
}

TEST_CASE("property: gradient lemma by finite differences") {
  for (const auto& arc : {upper, quarter, tilted})
    for (double alpha : {0.3, 0.5, 0.8}) {
      const auto c = level_curve(arc, alpha);
      for (int k = 0; k < 11; ++k) {
        const cplx z = c.point(c.length * (k + 0.5) / 11.0);
        const double h = 1e-5;
        auto d = [&](cplx e) {
          return (harmonic_measure(arc, z + h * e) - harmonic_measure(arc, z - h * e)) / (2.0 * h);
        };
        const double fd = 0.5 * std::hypot(d(1.0), d(cplx{0.0, 1.0}));
        CHECK(near(fd, std::sin(kPi * alpha) / (kPi * (1.0 - std::norm(z))), 1e-6));
      }
    }
}

TEST_CASE("lft_level_set examples") {
  const auto c1 = lft_level_set(LinearFractional{}, 0.5);
  CHECK(c1.kind == CircularArcCurve::Kind::circle_arc);
  CHECK(near(c1.length, kPi, 1e-14));
  const LinearFractional shift{1.0, -1.0, 0.0, 1.0};
  const auto c2 = lft_level_set(shift, 0.5);
  REQUIRE(!c2.empty());
  CHECK(near(c2.center, cplx{1.0, 0.0}, 1e-14));
  CHECK(near(c2.radius, 0.5, 1e-14));
  for (int k = 1; k < 10; ++k) {
    const cplx p = c2.point(c2.length * k / 10.0);
    CHECK(std::abs(p) < 1.0);
    CHECK(near(std::abs(shift(p)), 0.5, 1e-13));
  }
  // f(z) = 1/(z - 2) scaled to ad - bc = 1: |f| <= 1 on the disk
  const LinearFractional inv{0.0, cplx{0.0, 1.0}, cplx{0.0, 1.0}, cplx{0.0, -2.0}};
  inv.validate();
  CHECK(lft_level_set(inv, 5.0).empty());
  CHECK_THROWS_AS(lft_level_set(shift, 0.0), DomainError);
  CHECK_THROWS_AS((LinearFractional{1.0, 0.0, 1.0, 0.5}.validate()), DomainError);
}

TEST_CASE("sup_on_disk") {
  CHECK(near(LinearFractional{}.sup_on_disk(), 1.0, 1e-14));
  CHECK(near((LinearFractional{1.0, -1.0, 0.0, 1.0}.sup_on_disk()), 2.0, 1e-14));
  const LinearFractional inv{0.0, cplx{0.0, 1.0}, cplx{0.0, 1.0}, cplx{0.0, -2.0}};
  CHECK(near(inv.sup_on_disk(), 1.0, 1e-14));
}

TEST_CASE("window_arc examples") {
  CHECK(near(window_arc({1.0, 2.0}).half_length, kPi, 1e-15));
  CHECK(near(window_arc({1.0, 0.5}).half_length, 0.5053605102841573, 1e-12));
  const auto a = window_arc({cplx{0.0, 1.0}, 0.1});
  CHECK(near(a.center_angle, kPi / 2, 1e-15));
  CHECK(near(a.half_length, 0.1000417, 1e-7));
}

TEST_CASE("window_alpha is the level of the window boundary") {
  CHECK(near(window_alpha({1.0, 1e-8}), 0.5, 1e-8));
  CHECK(near(window_alpha({1.0, 1.0}), 1.0 / 3.0, 1e-15));
  CHECK(near(window_alpha({1.0, std::sqrt(2.0)}), 0.25, 1e-15));
  // oracle: harmonic measure of the window arc on the window's bounding circle
  for (double h : {0.05, 0.5, 1.0, 1.5})
    for (cplx zeta : {cplx{1.0, 0.0}, std::polar(1.0, 2.0)}) {
      const BoundaryArc f = window_arc({zeta, h});
      const double a = window_alpha({zeta, h});
      for (double t : {0.6, 0.8, 1.0, 1.2, 1.4}) {
        // points of |z - zeta| = h pointing back into the disk
        const cplx z = zeta - zeta * std::polar(h, t - 0.7);
        if (std::abs(z) >= 1.0) continue;
        CHECK(near(harmonic_measure(f, z), a, 1e-12));
      }
    }
}
