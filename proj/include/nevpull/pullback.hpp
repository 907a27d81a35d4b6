#pragma once

// Pull-back measures mu_phi of windows: the normalised arc measure pushed
// forward by the boundary function phi*, evaluated on closed window
// conditions. The measure of a window is the measure of the set of boundary
// parameters whose image satisfies the window's predicate.

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "nevpull/carleson.hpp"
#include "nevpull/kernels.hpp"
#include "nevpull/quad.hpp"

namespace nevpull {

/// Boundary values on uniform parameter grids of size base * 2^k, computed
/// once and shared between predicates. Thread-safe.
class BoundarySampler {
public:
  explicit BoundarySampler(const AnalyticSelfMap& map, Exec exec = Exec::parallel);

  const BoundaryChart& chart() const noexcept { return chart_; }
  const AnalyticSelfMap& map() const noexcept { return *map_; }
  /// Chart values at s_i = 2 pi i / n, i < n. n must be a power of two.
  std::vector<cplx> grid(std::size_t n) const;

private:
  std::shared_ptr<const AnalyticSelfMap> map_;
  BoundaryChart chart_;
  Exec exec_;
  mutable std::mutex mu_;
  mutable std::shared_ptr<const std::vector<cplx>> finest_;
};

/// A closed condition on a boundary value w = phi*(e^{i theta}).
///
/// Conditions are tested with a 1e-12 closure slack so that values lying
/// exactly on the window boundary (the image of a scaled map, say) are not
/// split by rounding noise.
struct BoundaryPredicate {
  enum class Kind {
    window_s,     // |w - zeta| <= u
    window_g,     // w in D and chi_F(w) >= u, or |w| = 1 and w in F
    radial,       // |w| >= u
    lft_at_least, // |f(w)| >= u
    disk,         // |w| < u
    on_arc,       // |w| = 1 and w in F
    everything
  };

  Kind kind = Kind::everything;
  double u = 0.0;
  cplx zeta{1.0, 0.0};
  BoundaryArc arc;
  LinearFractional lft;

  static BoundaryPredicate window_s(cplx zeta, double u);
  static BoundaryPredicate window_g(const BoundaryArc& arc, double u);
  static BoundaryPredicate radial(double u);
  static BoundaryPredicate lft_at_least(const LinearFractional& f, double u);
  static BoundaryPredicate disk(double u);
  static BoundaryPredicate on_arc_pred(const BoundaryArc& arc);
  static BoundaryPredicate everything_pred() { return {}; }

  bool holds(cplx w) const;
  /// The scalar whose closed sub- or superlevel set at u is the predicate
  /// (|w - zeta|, chi_F(w), |w|, |f(w)|); NaN where it does not depend on u.
  double scalar(cplx w) const;
};

struct PredicateOptions {
  std::size_t base_samples = 4096;
  /// Bisection stops once a crossing is bracketed to this parameter width.
  double crossing_tol = 1e-12;
  /// Doubling stops once two successive grids agree to this.
  double stability_tol = 1e-11;
  std::size_t max_samples = std::size_t{1} << 18;
};

struct MeasureResult {
  double value = 0.0;
  std::size_t samples = 0;
  std::size_t crossings = 0;
  std::vector<std::string> warnings;
};

/// Chart parameters of the local extrema of pred.scalar along the boundary.
/// They are added to every sampling grid so that sublevel sets narrower than
/// the grid spacing are still seen.
std::vector<double> scalar_extrema(const BoundarySampler& sampler, const BoundaryPredicate& pred);

/// `extrema` may be supplied (from scalar_extrema of any predicate of the same
/// family) to avoid recomputing them.
MeasureResult predicate_measure(const BoundarySampler& sampler, const BoundaryPredicate& pred,
                                const PredicateOptions& opt = {}, const std::vector<double>* extrema = nullptr);
double predicate_measure(const AnalyticSelfMap& map, const BoundaryPredicate& pred, double tol = 1e-12);

double window_measure_S(const AnalyticSelfMap& map, cplx zeta, double u);
double window_measure_G(const AnalyticSelfMap& map, const BoundaryArc& arc, double u);
double radial_complement_measure(const AnalyticSelfMap& map, double u);

/// A one-parameter family of windows, u -> window(u).
struct WindowFamily {
  enum class Kind { s_window, g_window, radial, lft_at_least, disk };

  Kind kind = Kind::radial;
  cplx zeta{1.0, 0.0};
  BoundaryArc arc;
  LinearFractional lft;

  static WindowFamily s_window(cplx zeta) { return {Kind::s_window, zeta, {}, {}}; }
  static WindowFamily g_window(const BoundaryArc& arc) { return {Kind::g_window, {1.0, 0.0}, arc, {}}; }
  static WindowFamily radial_family() { return {}; }
  static WindowFamily lft_family(const LinearFractional& f) { return {Kind::lft_at_least, {1.0, 0.0}, {}, f}; }
  static WindowFamily disk_family() { return {Kind::disk, {1.0, 0.0}, {}, {}}; }

  BoundaryPredicate at(double u) const;
  /// True when mu(window(u)) is nondecreasing in u.
  bool nondecreasing() const { return kind == Kind::s_window || kind == Kind::disk; }
  const char* name() const;
};

struct MeasureProfile {
  std::vector<double> grid;
  std::vector<double> values;
  /// is_jump[k]: the profile jumps inside [grid[k], grid[k+1]).
  std::vector<bool> is_jump;
  /// Exact jump locations (atoms of the profile variable) within the grid range.
  std::vector<double> jump_locations;
  bool monotone = true;
};

MeasureProfile measure_profile(const AnalyticSelfMap& map, const WindowFamily& family,
                               const std::vector<double>& grid);
MeasureProfile measure_profile(const BoundarySampler& sampler, const WindowFamily& family,
                               const std::vector<double>& grid);

/// u -> mu(window(u)) evaluated on demand, with its jump points (atoms of the
/// family's scalar along the boundary) and square-root onsets (critical values).
ProfileFunction profile_function(std::shared_ptr<const BoundarySampler> sampler, const WindowFamily& family);

}  // namespace nevpull
