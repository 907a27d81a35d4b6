#pragma once

// Configuration-driven runner: map mini-language, run configuration, suite
// execution with a JSON report, and CSV plot data.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nevpull/identities.hpp"

namespace nevpull {

inline constexpr const char* kToolVersion = "1.0.0";

/// Parses the map mini-language:
///   blaschke(zeros=[c1, c2, ...], rot=c)
///   scale(t, <map>)
///   singular(c=r, xi=c)
/// Complex literals are written a+bi, a-bi, bi, a or i. Throws ParseError
/// with the offending position, DomainError for invalid parameters.
AnalyticSelfMap parse_map_spec(const std::string& text);
cplx parse_complex(const std::string& text);

/// Every check name known to the runner, in canonical order.
const std::vector<std::string>& known_checks();

/// One parameter block of the configuration ([name] section).
struct CheckBlock {
  std::string name;
  std::vector<std::pair<std::string, std::string>> params;

  std::optional<std::string> get(const std::string& key) const;
};

struct RunConfig {
  std::string map_spec = "blaschke(zeros=[0], rot=1)";
  /// Selected check names, or {"all"}.
  std::vector<std::string> suite{"all"};
  double tol = 1e-5;
  std::string report_path;
  std::vector<CheckBlock> blocks;
  /// Include per-check wall time in the report (breaks byte-identical reruns).
  bool timings = false;
};

/// Key/value text: top-level `key = value` lines, then `[check_name]`
/// sections. `#` starts a comment. Throws ParseError with the line number.
RunConfig parse_run_config(const std::string& text);
RunConfig load_run_config(const std::string& path);

struct SuiteEntry {
  std::string check;
  std::vector<std::pair<std::string, std::string>> params;  // as given in the config
  enum class Outcome { ran, skipped, error } outcome = Outcome::ran;
  CheckResult result;  // when ran
  std::string reason;  // when skipped or error
};

struct ExperimentEntry {
  std::string map;
  BoundaryArc arc;
  DensityTable table;
};

struct Report {
  std::string version = kToolVersion;
  RunConfig config;
  std::vector<SuiteEntry> entries;
  std::vector<ExperimentEntry> experiments;
  int passed = 0, failed = 0, vacuous = 0, skipped = 0;

  int attempted() const { return passed + failed + vacuous + skipped; }
};

/// Runs the selected checks. Hypothesis violations are recorded as skipped;
/// other library errors count as failures.
Report run_suite(const RunConfig& config);
/// Deterministic JSON text; the timestamp is the only run-dependent field
/// unless timings are enabled.
std::string report_to_json(const Report& report, const std::string& timestamp);

enum class PlotKind { level_curve, measure_profile, counting_radial };
PlotKind parse_plot_kind(const std::string& s);

struct PlotParams {
  std::string map_spec = "blaschke(zeros=[0], rot=1)";
  BoundaryArc arc = BoundaryArc::upper_half();
  double alpha = 0.75;
  /// measure_profile: s (S(zeta, u)), g (G_F(u)), radial (|w| >= u), disk (|w| < u)
  std::string family = "s";
  cplx zeta{1.0, 0.0};
  double from = 0.0;
  double to = 2.0;
  int points = 101;
};

/// CSV text with a header row: level_curve "s,x,y"; measure_profile
/// "u,mu,is_jump"; counting_radial "r,circle_average_N".
std::string plot_data_csv(PlotKind kind, const PlotParams& params);
void emit_plot_data(PlotKind kind, const PlotParams& params, const std::string& path);

}  // namespace nevpull
