#pragma once

// Each check computes the two sides of one identity or inequality relating
// the counting function to pull-back measures, by disjoint routes, and
// reports their agreement.

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "nevpull/carleson.hpp"
#include "nevpull/selfmap.hpp"

namespace nevpull {

struct CheckResult {
  enum class Status { pass, fail, vacuous };
  enum class Relation { equal, at_most, less_than };

  std::string name;
  std::vector<std::pair<std::string, std::string>> parameters;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;
  double tol = 0.0;
  Relation relation = Relation::equal;
  Status status = Status::fail;
  std::string lhs_provenance;
  std::string rhs_provenance;
  std::vector<std::string> notes;
  double seconds = 0.0;

  bool pass() const { return status != Status::fail; }
};

const char* to_string(CheckResult::Status s);
const char* to_string(CheckResult::Relation r);

/// Polynomial f(z) = sum c_k z^k (coefficients from the constant term up).
struct Polynomial {
  std::vector<cplx> coeffs;

  cplx operator()(cplx z) const;
  cplx derivative(cplx z) const;
  std::string render() const;
};

/// Test functions G for the subharmonic boundary-average formula.
namespace stanton {
struct Constant {
  double value = 1.0;
};
struct ModulusSquared {};  // |z|^2
struct PolySquared {       // |f(z)|^2
  Polynomial f;
};
/// max(log t1, min(log |z|, log t2)): a difference of two subharmonic
/// functions whose Laplacian is carried by the circles |z| = t1 and |z| = t2.
struct LogClamp {
  double t1 = 0.25;
  double t2 = 0.75;
};
using Function = std::variant<Constant, ModulusSquared, PolySquared, LogClamp>;
std::string describe(const Function& g);
}  // namespace stanton

/// Integrands for the coarea check.
enum class CoareaFunction { one, half_disk_indicator, one_minus_r2 };
const char* to_string(CoareaFunction g);

struct DensityRow {
  double alpha = 0.0;
  double lhs = 0.0;     // integral of N/(1-|z|^2) over the level curve
  double scaled = 0.0;  // lhs * sin(pi alpha) / (pi^2 (1 - alpha))
  double target = 0.0;  // mu(F)
  double gap = 0.0;     // |scaled - target|
};

struct DensityTable {
  std::vector<DensityRow> rows;
  /// Gaps are non-increasing along the grid up to a 1e-8 noise floor.
  bool gap_non_increasing = true;
  std::vector<std::string> notes;
};

// --- boundary average identities ---------------------------------------------

CheckResult check_littlewood_paley(const AnalyticSelfMap& map, const Polynomial& f, double tol = 1e-5);
CheckResult check_stanton(const AnalyticSelfMap& map, const stanton::Function& g, double tol = 1e-5);
CheckResult check_lft_level(const AnalyticSelfMap& map, const LinearFractional& f, double t, double tol = 1e-5);
CheckResult check_circle_average(const AnalyticSelfMap& map, double r, double tol = 1e-5);
CheckResult check_disk_average(const AnalyticSelfMap& map, double r, double tol = 1e-5);
CheckResult check_window_identity(const AnalyticSelfMap& map, cplx zeta, double h, double tol = 1e-5);
CheckResult check_window_inequality(const AnalyticSelfMap& map, cplx zeta, double h);

// --- level-curve identities and consequences -----------------------------------

CheckResult check_gradient_lemma(const BoundaryArc& arc, double alpha, int n_points = 11, double tol = 1e-6);
CheckResult check_coarea(CoareaFunction g, const BoundaryArc& arc, double tol = 1e-6);
CheckResult check_level_measure_identity(const AnalyticSelfMap& map, const BoundaryArc& arc, double alpha,
                                         double tol = 1e-5);
CheckResult check_average_ratio_bound(const AnalyticSelfMap& map, cplx zeta, double h);
CheckResult check_sup_bound(const AnalyticSelfMap& map, cplx zeta, double h);
CheckResult check_inner_unit_ratio(const AnalyticSelfMap& map, int samples = 100, double tol = 1e-8);
CheckResult check_carleson_bound(const AnalyticSelfMap& map, const BoundaryArc& arc, double alpha);
DensityTable boundary_density_experiment(const AnalyticSelfMap& map, const BoundaryArc& arc,
                                         const std::vector<double>& alpha_grid);

/// The constant of the window-average bound, from the factor chain of its
/// proof: max 2(1-a_t)/sin(pi a_t) * (h^2/2)/v(S) * max sigma_t/(t/pi), over
/// t <= h, times (1 + 1e-6).
double average_ratio_constant(double h);

}  // namespace nevpull
