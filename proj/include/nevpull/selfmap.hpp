#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace nevpull {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

struct Preimage {
  cplx point;
  int multiplicity = 1;
};

class BoundaryChart;

/// Analytic self-map of the unit disk.
///
/// Three families are representable: finite Blaschke products, scalar
/// multiples t*phi with t in (0,1], and the atomic singular inner function
/// exp(-c (xi+z)/(xi-z)). Values are immutable once constructed.
///
/// Blaschke factors use the convention (z - a)/(1 - conj(a) z), so a zero at
/// the origin contributes the factor z.
class AnalyticSelfMap {
public:
  struct Blaschke {
    std::vector<cplx> zeros;
    cplx rotation{1.0, 0.0};
  };
  struct Scaled {
    std::shared_ptr<const AnalyticSelfMap> inner;
    double t = 1.0;
  };
  struct AtomicSingular {
    double mass = 1.0;
    cplx atom{1.0, 0.0};
  };
  using Rep = std::variant<Blaschke, Scaled, AtomicSingular>;

  static AnalyticSelfMap blaschke(std::vector<cplx> zeros, cplx rotation = {1.0, 0.0});
  static AnalyticSelfMap scaled(double t, AnalyticSelfMap inner);
  static AnalyticSelfMap atomic_singular(double mass, cplx atom = {1.0, 0.0});

  /// phi(z) for |z| < 1; throws DomainError otherwise.
  cplx evaluate(cplx z) const;
  /// phi'(z) for |z| < 1.
  cplx derivative(cplx z) const;
  /// Radial limit phi*(e^{i theta}). Throws SingularPointError at a singular atom.
  cplx boundary_value(double theta) const;
  /// All solutions of phi(z) = a in the open disk, with multiplicity.
  /// Only rational maps are supported.
  std::vector<Preimage> preimages(cplx a) const;
  cplx origin_image() const { return evaluate(cplx{0.0, 0.0}); }

  bool is_rational() const;
  bool is_inner() const;
  /// Degree of the underlying finite Blaschke product, 0 when not rational.
  int degree() const;
  /// Radii rho such that the counting function may fail to be smooth across
  /// |w| = rho (the image of the circle under phi when it lies inside D).
  std::vector<double> kink_radii() const;
  /// Angle of the boundary singularity, if any.
  std::optional<double> singular_angle() const;

  /// Parametrisation of the boundary push-forward used by the pull-back and
  /// counting-function integrals.
  BoundaryChart boundary_chart() const;

  /// Text in the map mini-language that parses back to this map.
  std::string render() const;

  const Rep& rep() const noexcept { return rep_; }

private:
  explicit AnalyticSelfMap(Rep rep) : rep_(std::move(rep)) {}
  Rep rep_;
};

/// The normalised arc measure on the circle, pushed forward by phi*, written
/// as a density on a parameter s in [0, 2pi).
///
/// For maps with a continuous boundary function the parameter is the angle and
/// the density is 1/2pi. For the atomic singular inner function the boundary
/// function winds infinitely often near the atom; the substitution
/// s = c cot((theta - arg xi)/2) folded modulo 2pi turns the push-forward into
/// w(s) = e^{-is} with a wrapped Cauchy density of parameter r = e^{-c}.
class BoundaryChart {
public:
  enum class Kind { uniform_angle, wrapped_cauchy };

  static BoundaryChart uniform(std::shared_ptr<const AnalyticSelfMap> map);
  static BoundaryChart wrapped_cauchy(double r, double scale);

  Kind kind() const noexcept { return kind_; }
  /// Boundary value at chart parameter s.
  cplx value(double s) const;
  /// Density of the push-forward with respect to ds; integrates to 1.
  double density(double s) const;
  /// Measure of the parameter interval [0, s], for s in [0, 2pi].
  double cumulative(double s) const;
  double measure(double s0, double s1) const { return cumulative(s1) - cumulative(s0); }

  /// wrapped_cauchy only: the density is the Poisson kernel of the point r on
  /// the circle of radius `scale`.
  double poisson_radius() const noexcept { return r_; }
  double scale() const noexcept { return scale_; }

private:
  BoundaryChart() = default;
  Kind kind_ = Kind::uniform_angle;
  std::shared_ptr<const AnalyticSelfMap> map_;
  double r_ = 0.0;
  double scale_ = 1.0;
};

/// Pseudo-hyperbolic distance |z - w| / |1 - conj(w) z|.
double pseudo_hyperbolic(cplx z, cplx w);

/// Polynomial roots through a balanced companion matrix. Coefficients are
/// ordered from the constant term upward; the leading coefficient must be
/// non-zero.
std::vector<cplx> polynomial_roots(std::span<const cplx> coeffs);

}  // namespace nevpull
