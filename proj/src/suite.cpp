#include <algorithm>
#include <cmath>
#include <sstream>

#include "json.hpp"
#include "nevpull/cli.hpp"
#include "nevpull/errors.hpp"

namespace nevpull {

namespace {

using json = nlohmann::ordered_json;

struct Args {
  const CheckBlock& block;

  double real(const std::string& key, double def) const {
    const auto v = block.get(key);
    if (!v) return def;
    const cplx z = parse_complex(*v);
    if (z.imag() != 0.0) throw DomainError(key + " must be real");
    return z.real();
  }
  int integer(const std::string& key, int def) const {
    const auto v = block.get(key);
    return v ? std::stoi(*v) : def;
  }
  cplx complex(const std::string& key, cplx def) const {
    const auto v = block.get(key);
    return v ? parse_complex(*v) : def;
  }
  std::string text(const std::string& key, const std::string& def) const { return block.get(key).value_or(def); }
  BoundaryArc arc() const {
    const BoundaryArc d = BoundaryArc::upper_half();
    return {real("arc_center", d.center_angle), real("arc_half", d.half_length)};
  }
  std::vector<double> reals(const std::string& key, std::vector<double> def) const {
    const auto v = block.get(key);
    if (!v) return def;
    std::vector<double> out;
    std::string s = *v;
    s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == '[' || c == ']'; }), s.end());
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(parse_complex(item).real());
    return out;
  }
  std::vector<cplx> complexes(const std::string& key, std::vector<cplx> def) const {
    const auto v = block.get(key);
    if (!v) return def;
    std::vector<cplx> out;
    std::string s = *v;
    s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == '[' || c == ']'; }), s.end());
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(parse_complex(item));
    return out;
  }
};

// constant(v), modulus_squared, poly([c0, c1, ...]), logclamp(t1, t2)
stanton::Function parse_stanton(const std::string& s) {
  auto inside = [&](const std::string& head) {
    if (s.rfind(head + "(", 0) != 0 || s.back() != ')')
      throw ParseError("malformed G '" + s + "'", 0);
    return s.substr(head.size() + 1, s.size() - head.size() - 2);
  };
  if (s == "modulus_squared") return stanton::ModulusSquared{};
  if (s.rfind("constant", 0) == 0) return stanton::Constant{parse_complex(inside("constant")).real()};
  if (s.rfind("poly", 0) == 0) {
    CheckBlock b{"", {{"f", inside("poly")}}};
    return stanton::PolySquared{Polynomial{Args{b}.complexes("f", {})}};
  }
  if (s.rfind("logclamp", 0) == 0) {
    CheckBlock b{"", {{"t", inside("logclamp")}}};
    const auto t = Args{b}.reals("t", {});
    if (t.size() != 2) throw ParseError("logclamp needs two radii", 0);
    return stanton::LogClamp{t[0], t[1]};
  }
  throw ParseError("unknown G '" + s + "'", 0);
}

CoareaFunction parse_coarea(const std::string& s) {
  for (auto g : {CoareaFunction::one, CoareaFunction::half_disk_indicator, CoareaFunction::one_minus_r2})
    if (s == to_string(g)) return g;
  throw ParseError("unknown coarea function '" + s + "'", 0);
}

CheckResult run_check(const std::string& name, const AnalyticSelfMap& map, const Args& a, double tol) {
  if (name == "check_littlewood_paley")
    return check_littlewood_paley(map, Polynomial{a.complexes("f", {0.0, 1.0})}, a.real("tol", tol));
  if (name == "check_stanton")
    return check_stanton(map, parse_stanton(a.text("G", "modulus_squared")), a.real("tol", tol));
  if (name == "check_lft_level") {
    const LinearFractional f{a.complex("a", 1.0), a.complex("b", 0.0), a.complex("c", 0.0), a.complex("d", 1.0)};
    return check_lft_level(map, f, a.real("t", 0.5), a.real("tol", tol));
  }
  if (name == "check_circle_average") return check_circle_average(map, a.real("r", 0.25), a.real("tol", tol));
  if (name == "check_disk_average")
    return check_disk_average(map, a.real("r", 0.5 * std::abs(map.origin_image())), a.real("tol", tol));
  if (name == "check_window_identity")
    return check_window_identity(map, a.complex("zeta", 1.0), a.real("h", 0.5), a.real("tol", tol));
  if (name == "check_window_inequality") return check_window_inequality(map, a.complex("zeta", 1.0), a.real("h", 0.25));
  if (name == "check_gradient_lemma")
    return check_gradient_lemma(a.arc(), a.real("alpha", 0.5), a.integer("points", 11), a.real("tol", 1e-6));
  if (name == "check_coarea") return check_coarea(parse_coarea(a.text("g", "one")), a.arc(), a.real("tol", 1e-6));
  if (name == "check_level_measure_identity")
    return check_level_measure_identity(map, a.arc(), a.real("alpha", 0.75), a.real("tol", tol));
  if (name == "check_average_ratio_bound") return check_average_ratio_bound(map, a.complex("zeta", 1.0), a.real("h", 0.1));
  if (name == "check_sup_bound") return check_sup_bound(map, a.complex("zeta", 1.0), a.real("h", 0.2));
  if (name == "check_inner_unit_ratio")
    return check_inner_unit_ratio(map, a.integer("samples", 100), a.real("tol", 1e-8));
  if (name == "check_carleson_bound") return check_carleson_bound(map, a.arc(), a.real("alpha", 0.5));
  throw DomainError("unknown check " + name);
}

std::string key_of(const SuiteEntry& e) {
  std::string k = e.check;
  for (const auto& [p, v] : e.params) k += "\x1f" + p + "=" + v;
  return k;
}

json params_json(const std::vector<std::pair<std::string, std::string>>& ps) {
  json o = json::object();
  for (const auto& [k, v] : ps) o[k] = v;
  return o;
}

json number(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

}  // namespace

Report run_suite(const RunConfig& config) {
  Report rep;
  rep.config = config;
  std::vector<std::string> selected;
  const bool all = std::find(config.suite.begin(), config.suite.end(), "all") != config.suite.end();
  for (const auto& name : known_checks())
    if (all || std::find(config.suite.begin(), config.suite.end(), name) != config.suite.end())
      selected.push_back(name);

  for (const auto& name : selected) {
    std::vector<CheckBlock> blocks;
    for (const auto& b : config.blocks)
      if (b.name == name) blocks.push_back(b);
    if (blocks.empty()) blocks.push_back({name, {}});

    for (const CheckBlock& b : blocks) {
      SuiteEntry e;
      e.check = name;
      const std::string spec = b.get("map").value_or(config.map_spec);
      e.params.emplace_back("map", spec);
      for (const auto& p : b.params)
        if (p.first != "map") e.params.push_back(p);
      try {
        const AnalyticSelfMap map = parse_map_spec(spec);
        const Args args{b};
        if (name == "boundary_density_experiment") {
          ExperimentEntry x{map.render(), args.arc(), {}};
          x.table = boundary_density_experiment(map, x.arc, args.reals("alphas", {0.9, 0.99, 0.999}));
          rep.experiments.push_back(std::move(x));
          continue;
        }
        e.result = run_check(name, map, args, config.tol);
        e.outcome = SuiteEntry::Outcome::ran;
        if (e.result.status == CheckResult::Status::pass)
          ++rep.passed;
        else if (e.result.status == CheckResult::Status::vacuous)
          ++rep.vacuous;
        else
          ++rep.failed;
      } catch (const HypothesisError& err) {
        e.outcome = SuiteEntry::Outcome::skipped;
        e.reason = err.what();
        ++rep.skipped;
      } catch (const std::exception& err) {
        e.outcome = SuiteEntry::Outcome::error;
        e.reason = err.what();
        ++rep.failed;
      }
      rep.entries.push_back(std::move(e));
    }
  }
  std::stable_sort(rep.entries.begin(), rep.entries.end(),
                   [](const SuiteEntry& x, const SuiteEntry& y) { return key_of(x) < key_of(y); });
  return rep;
}

std::string report_to_json(const Report& report, const std::string& timestamp) {
  json j;
  j["tool"] = "nevpull";
  j["version"] = report.version;
  j["timestamp"] = timestamp;

  json cfg;
  cfg["map"] = report.config.map_spec;
  cfg["suite"] = report.config.suite;
  cfg["tol"] = report.config.tol;
  json blocks = json::array();
  for (const auto& b : report.config.blocks) blocks.push_back({{"check", b.name}, {"params", params_json(b.params)}});
  cfg["blocks"] = blocks;
  j["config"] = cfg;

  json results = json::array();
  for (const auto& e : report.entries) {
    json r;
    r["check"] = e.check;
    r["config_params"] = params_json(e.params);
    switch (e.outcome) {
      case SuiteEntry::Outcome::ran: {
        const CheckResult& c = e.result;
        r["status"] = to_string(c.status);
        r["pass"] = c.pass();
        r["parameters"] = params_json(c.parameters);
        r["lhs"] = number(c.lhs);
        r["relation"] = to_string(c.relation);
        r["rhs"] = number(c.rhs);
        r["abs_err"] = number(c.abs_err);
        r["rel_err"] = number(c.rel_err);
        r["tol"] = number(c.tol);
        r["lhs_provenance"] = c.lhs_provenance;
        r["rhs_provenance"] = c.rhs_provenance;
        r["notes"] = c.notes;
        if (report.config.timings) r["seconds"] = c.seconds;
        break;
      }
      case SuiteEntry::Outcome::skipped:
        r["status"] = "skipped";
        r["pass"] = true;
        r["reason"] = e.reason;
        break;
      case SuiteEntry::Outcome::error:
        r["status"] = "fail";
        r["pass"] = false;
        r["reason"] = e.reason;
        break;
    }
    results.push_back(r);
  }
  j["results"] = results;

  json exps = json::array();
  for (const auto& x : report.experiments) {
    json rows = json::array();
    for (const auto& row : x.table.rows)
      rows.push_back({{"alpha", row.alpha},
                      {"lhs", number(row.lhs)},
                      {"scaled", number(row.scaled)},
                      {"target", number(row.target)},
                      {"gap", number(row.gap)}});
    exps.push_back({{"experiment", "boundary_density_experiment"},
                    {"map", x.map},
                    {"arc_center", x.arc.center_angle},
                    {"arc_half", x.arc.half_length},
                    {"rows", rows},
                    {"gap_non_increasing", x.table.gap_non_increasing},
                    {"notes", x.table.notes}});
  }
  j["experiments"] = exps;

  j["summary"] = {{"pass", report.passed},
                  {"fail", report.failed},
                  {"vacuous", report.vacuous},
                  {"skipped", report.skipped},
                  {"attempted", report.attempted()}};
  return j.dump(2) + "\n";
}

}  // namespace nevpull
