#include <fstream>
#include <sstream>

#include "nevpull/cli.hpp"
#include "nevpull/errors.hpp"

namespace nevpull {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

ParseError config_error(const std::string& what, std::size_t line) {
  return ParseError("config line " + std::to_string(line) + ": " + what, line);
}

}  // namespace

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> names{
      "check_littlewood_paley",   "check_stanton",
      "check_lft_level",          "check_circle_average",
      "check_disk_average",       "check_window_identity",
      "check_window_inequality",  "check_gradient_lemma",
      "check_coarea",             "check_level_measure_identity",
      "check_average_ratio_bound", "check_sup_bound",
      "check_inner_unit_ratio",   "check_carleson_bound",
      "boundary_density_experiment"};
  return names;
}

std::optional<std::string> CheckBlock::get(const std::string& key) const {
  for (const auto& [k, v] : params)
    if (k == key) return v;
  return std::nullopt;
}

RunConfig parse_run_config(const std::string& text) {
  RunConfig cfg;
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  CheckBlock* block = nullptr;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw config_error("unterminated section header", line_no);
      const std::string name = trim(line.substr(1, line.size() - 2));
      bool known = false;
      for (const auto& k : known_checks()) known = known || k == name;
      if (!known) throw config_error("unknown check '" + name + "'", line_no);
      cfg.blocks.push_back({name, {}});
      block = &cfg.blocks.back();
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw config_error("expected key = value", line_no);
    const std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (key.empty()) throw config_error("empty key", line_no);
    if (block) {
      block->params.emplace_back(key, value);
      continue;
    }
    if (key == "map") {
      cfg.map_spec = value;
    } else if (key == "suite") {
      cfg.suite = split_list(value);
      for (const auto& s : cfg.suite) {
        bool known = s == "all";
        for (const auto& k : known_checks()) known = known || k == s;
        if (!known) throw config_error("unknown check '" + s + "' in suite", line_no);
      }
    } else if (key == "tol") {
      try {
        cfg.tol = std::stod(value);
      } catch (const std::exception&) {
        throw config_error("tol is not a number", line_no);
      }
      if (!(cfg.tol > 0.0)) throw config_error("tol must be positive", line_no);
    } else if (key == "report") {
      cfg.report_path = value;
    } else if (key == "timings") {
      cfg.timings = value == "true" || value == "1" || value == "yes";
    } else {
      throw config_error("unknown key '" + key + "'", line_no);
    }
  }
  parse_map_spec(cfg.map_spec);
  return cfg;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open config file " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_run_config(ss.str());
}

}  // namespace nevpull
