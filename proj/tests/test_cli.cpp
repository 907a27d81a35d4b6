#include <cmath>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "nevpull/cli.hpp"
#include "nevpull/errors.hpp"
#include "support.hpp"

using namespace nevpull;
using namespace testing;

TEST_CASE("parse_map_spec examples") {
  const auto id = parse_map_spec("blaschke(zeros=[0], rot=1)");
  CHECK(near(id.evaluate(cplx{0.3, 0.2}), cplx{0.3, 0.2}, 1e-15));
  const auto half = parse_map_spec("scale(0.5, blaschke(zeros=[0]))");
  CHECK(near(half.evaluate(0.6), cplx{0.3, 0.0}, 1e-15));
  const auto b = parse_map_spec("blaschke(zeros=[0, 0.5+0i])");
  CHECK(b.degree() == 2);
  CHECK(near(b.evaluate(0.75), cplx{0.3, 0.0}, 1e-15));
  const auto s = parse_map_spec("singular(c=2, xi=0+1i)");
  CHECK(near(s.origin_image(), cplx{std::exp(-2.0), 0.0}, 1e-15));
}

TEST_CASE("complex literals") {
  CHECK(parse_complex("0.5+0i") == cplx{0.5, 0.0});
  CHECK(parse_complex("-0.2-0.3i") == cplx{-0.2, -0.3});
  CHECK(parse_complex("0.3i") == cplx{0.0, 0.3});
  CHECK(parse_complex("i") == cplx{0.0, 1.0});
  CHECK(parse_complex("-i") == cplx{0.0, -1.0});
  CHECK(parse_complex(" 1e-3 ") == cplx{1e-3, 0.0});
  CHECK(parse_complex("1+i") == cplx{1.0, 1.0});
  CHECK_THROWS_AS(parse_complex("1+2"), ParseError);
  CHECK_THROWS_AS(parse_complex("abc"), ParseError);
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_map_spec("blaschke(zeros=[0, 0.5)");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 22);
  }
  CHECK_THROWS_AS(parse_map_spec("blaschke(zeros=[0]) extra"), ParseError);
  CHECK_THROWS_AS(parse_map_spec("mobius(1)"), ParseError);
  CHECK_THROWS_AS(parse_map_spec("singular(xi=1)"), ParseError);
  CHECK_THROWS_AS(parse_map_spec("blaschke(zeros=[1.5])"), DomainError);
}

TEST_CASE("property: render round trip") {
  const std::vector<AnalyticSelfMap> maps{
      identity(), b_three(), scaled(0.37, b_half()), AnalyticSelfMap::atomic_singular(0.7, std::polar(1.0, 2.0)),
      scaled(0.9, scaled(0.8, AnalyticSelfMap::blaschke({cplx{0.1, -0.7}, cplx{-0.33, 0.21}}, std::polar(1.0, -1.0))))};
  for (const auto& m : maps) {
    const auto back = parse_map_spec(m.render());
    CHECK(back.render() == m.render());
    for (cplx z : spiral(30, 0.95)) CHECK(back.evaluate(z) == m.evaluate(z));
  }
}

TEST_CASE("run config parsing") {
  const auto cfg = parse_run_config(
      "# comment\n"
      "map = blaschke(zeros=[0, 0.5])\n"
      "suite = check_window_identity, check_coarea\n"
      "tol = 1e-6\n"
      "\n"
      "[check_window_identity]\n"
      "zeta = -1   # trailing comment\n"
      "h = 0.5\n"
      "[check_window_identity]\n"
      "h = 0.25\n");
  CHECK(cfg.map_spec == "blaschke(zeros=[0, 0.5])");
  CHECK(cfg.suite == std::vector<std::string>{"check_window_identity", "check_coarea"});
  CHECK(cfg.tol == 1e-6);
  REQUIRE(cfg.blocks.size() == 2);
  CHECK(cfg.blocks[0].get("zeta") == std::optional<std::string>("-1"));
  CHECK(!cfg.blocks[1].get("zeta"));
  CHECK_THROWS_AS(parse_run_config("suite = nonsense\n"), ParseError);
  CHECK_THROWS_AS(parse_run_config("[nonsense]\n"), ParseError);
  CHECK_THROWS_AS(parse_run_config("map = blaschke(\n"), ParseError);
  CHECK_THROWS_AS(parse_run_config("just text\n"), ParseError);
}

TEST_CASE("run_suite examples") {
  RunConfig all;
  const Report r = run_suite(all);
  CHECK(r.failed == 0);
  CHECK(r.passed > 10);
  CHECK(r.attempted() == static_cast<int>(r.entries.size()));

  const auto inside = parse_run_config("suite = check_window_identity\n[check_window_identity]\nzeta = 1\nh = 1.5\n");
  const Report s = run_suite(inside);
  CHECK(s.skipped == 1);
  CHECK(s.attempted() == 1);
  CHECK(s.entries[0].outcome == SuiteEntry::Outcome::skipped);

  RunConfig empty;
  empty.suite.clear();
  const Report e = run_suite(empty);
  CHECK(e.attempted() == 0);
  const auto j = nlohmann::json::parse(report_to_json(e, "t"));
  CHECK(j["summary"]["pass"] == 0);
  CHECK(j["summary"]["fail"] == 0);
  CHECK(j["results"].empty());
}

TEST_CASE("property: report determinism") {
  const auto cfg = parse_run_config(
      "map = blaschke(zeros=[0, 0.5])\n"
      "suite = check_window_identity, check_circle_average, check_carleson_bound\n"
      "[check_window_identity]\nzeta = -1\n[check_window_identity]\nzeta = i\nh = 0.3\n");
  const std::string a = report_to_json(run_suite(cfg), "x");
  const std::string b = report_to_json(run_suite(cfg), "x");
  CHECK(a == b);
  const auto j = nlohmann::json::parse(a);
  CHECK(j["summary"]["attempted"] == 4);
  // sorted by check name, then parameters
  std::vector<std::string> names;
  for (const auto& r : j["results"]) names.push_back(r["check"]);
  CHECK(std::is_sorted(names.begin(), names.end()));
}

TEST_CASE("plot data examples") {
  PlotParams p;
  p.alpha = 0.75;
  p.points = 5;
  std::istringstream lc(plot_data_csv(PlotKind::level_curve, p));
  std::string line;
  std::getline(lc, line);
  CHECK(line == "s,x,y");
  std::vector<std::string> rows;
  while (std::getline(lc, line)) rows.push_back(line);
  REQUIRE(rows.size() == 5);
  double s, x, y;
  char c1, c2;
  std::istringstream mid(rows[2]);
  mid >> s >> c1 >> x >> c2 >> y;
  CHECK(near(x, 0.0, 1e-12));
  CHECK(near(y, std::sqrt(2.0) - 1.0, 1e-9));

  PlotParams q;
  q.from = 0.1;
  q.to = 1.0;
  q.points = 10;
  std::istringstream mp(plot_data_csv(PlotKind::measure_profile, q));
  std::getline(mp, line);
  CHECK(line == "u,mu,is_jump");
  while (std::getline(mp, line)) {
    double u, mu, jump;
    std::istringstream row(line);
    row >> u >> c1 >> mu >> c2 >> jump;
    CHECK(near(mu, 2.0 / kPi * std::asin(0.5 * u), 1e-10));
  }

  PlotParams r;
  r.from = 0.1;
  r.to = 0.9;
  r.points = 9;
  std::istringstream cr(plot_data_csv(PlotKind::counting_radial, r));
  std::getline(cr, line);
  CHECK(line == "r,circle_average_N");
  while (std::getline(cr, line)) {
    double rad, v;
    std::istringstream row(line);
    row >> rad >> c1 >> v;
    CHECK(near(v, -std::log(rad), 1e-9));
  }
  CHECK_THROWS_AS(parse_plot_kind("histogram"), DomainError);
}
