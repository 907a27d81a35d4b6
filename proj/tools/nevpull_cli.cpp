// nevpull: verify identities from a config, evaluate N_phi, emit plot data.

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "nevpull/cli.hpp"
#include "nevpull/errors.hpp"
#include "nevpull/nevanlinna.hpp"

using namespace nevpull;

namespace {

std::string utc_timestamp() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

int verify(const std::string& config_path, double tol, const std::string& report_path, bool timings) {
  RunConfig cfg = load_run_config(config_path);
  if (tol > 0.0) cfg.tol = tol;
  if (!report_path.empty()) cfg.report_path = report_path;
  cfg.timings = cfg.timings || timings;
  const Report rep = run_suite(cfg);
  const std::string text = report_to_json(rep, utc_timestamp());
  if (cfg.report_path.empty() || cfg.report_path == "-") {
    std::cout << text;
  } else {
    std::ofstream f(cfg.report_path);
    if (!f) throw Error("cannot write " + cfg.report_path);
    f << text;
  }
  std::fprintf(stderr, "pass %d, fail %d, vacuous %d, skipped %d\n", rep.passed, rep.failed, rep.vacuous,
               rep.skipped);
  return rep.failed == 0 ? 0 : 1;
}

int nev(const std::string& spec, const std::string& at, const std::string& method) {
  const AnalyticSelfMap map = parse_map_spec(spec);
  const cplx a = parse_complex(at);
  CountingValue v;
  if (method == "roots")
    v = counting_roots(map, a);
  else if (method == "integral")
    v = counting_integral(map, a);
  else
    v = counting(map, a);
  std::printf("N(%s) = %.15g\nmethod: %s\nestimated error: %.3g\n", at.c_str(), v.value, to_string(v.method),
              v.estimated_error);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nevanlinna counting functions and pull-back measures of disk self-maps"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  auto* v = app.add_subcommand("verify", "run the checks selected by a config file");
  std::string config_path, report_path;
  double tol = 0.0;
  bool timings = false;
  v->add_option("--config", config_path, "config file")->required()->check(CLI::ExistingFile);
  v->add_option("--tol", tol, "tolerance for equality checks (overrides the config)");
  v->add_option("--report", report_path, "JSON report path, '-' for stdout");
  v->add_flag("--timings", timings, "record wall time per check");

  auto* n = app.add_subcommand("nev", "evaluate the counting function");
  std::string spec, at, method = "auto";
  n->add_option("--map", spec, "map spec, e.g. \"blaschke(zeros=[0, 0.5])\"")->required();
  n->add_option("--at", at, "point a in the disk, e.g. 0.3+0.1i")->required();
  n->add_option("--method", method, "roots, integral or auto")
      ->check(CLI::IsMember({"roots", "integral", "auto"}));

  auto* p = app.add_subcommand("plot", "write CSV plot data");
  std::string kind, out;
  PlotParams pp;
  std::string zeta = "1";
  p->add_option("--kind", kind, "level_curve, measure_profile or counting_radial")
      ->required()
      ->check(CLI::IsMember({"level_curve", "measure_profile", "counting_radial"}));
  p->add_option("--out", out, "CSV path")->required();
  p->add_option("--map", pp.map_spec, "map spec");
  p->add_option("--alpha", pp.alpha, "level (level_curve)");
  p->add_option("--arc-center", pp.arc.center_angle, "arc centre angle");
  p->add_option("--arc-half", pp.arc.half_length, "arc half length");
  p->add_option("--family", pp.family, "profile family: s, g, radial, disk")
      ->check(CLI::IsMember({"s", "g", "radial", "disk"}));
  p->add_option("--zeta", zeta, "window centre on the circle");
  auto* from = p->add_option("--from", pp.from, "first grid value");
  auto* to = p->add_option("--to", pp.to, "last grid value");
  p->add_option("--points", pp.points, "grid size");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*v) return verify(config_path, tol, report_path, timings);
    if (*n) return nev(spec, at, method);
    if (*p) {
      pp.zeta = parse_complex(zeta);
      const PlotKind k = parse_plot_kind(kind);
      // radii must stay inside the disk
      if (k == PlotKind::counting_radial) {
        if (from->count() == 0) pp.from = 0.01;
        if (to->count() == 0) pp.to = 0.99;
      }
      emit_plot_data(k, pp, out);
      return 0;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
