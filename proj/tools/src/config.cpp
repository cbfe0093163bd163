#include "config.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace ellsol::cli {

namespace {

std::string trim(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

double parse_double(const std::string& v, const std::string& where) {
  size_t pos = 0;
  double d = 0;
  try {
    d = std::stod(v, &pos);
  } catch (const std::exception&) {
    throw ConfigError(where + ": cannot parse '" + v + "' as a number");
  }
  if (pos != v.size()) {
    throw ConfigError(where + ": trailing junk in number '" + v + "'");
  }
  return d;
}

int parse_int(const std::string& v, const std::string& where) {
  size_t pos = 0;
  int n = 0;
  try {
    n = std::stoi(v, &pos);
  } catch (const std::exception&) {
    throw ConfigError(where + ": cannot parse '" + v + "' as an integer");
  }
  if (pos != v.size()) {
    throw ConfigError(where + ": trailing junk in integer '" + v + "'");
  }
  return n;
}

std::vector<double> parse_list(const std::string& v, const std::string& where) {
  std::vector<double> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) throw ConfigError(where + ": empty element in list");
    out.push_back(parse_double(item, where));
  }
  if (out.empty()) throw ConfigError(where + ": list is empty");
  return out;
}

bool set_tolerance(SuiteTolerances& t, const std::string& key, double v) {
  if (key == "wp_ode") t.wp_ode = v;
  else if (key == "wp_second") t.wp_second = v;
  else if (key == "wp_third") t.wp_third = v;
  else if (key == "addition") t.addition = v;
  else if (key == "sn_ode") t.sn_ode = v;
  else if (key == "h_ode") t.h_ode = v;
  else if (key == "h1_ode") t.h1_ode = v;
  else if (key == "mobius") t.mobius = v;
  else if (key == "backlund") t.backlund = v;
  else if (key == "static_kdv") t.static_kdv = v;
  else if (key == "commutativity") t.commutativity = v;
  else if (key == "time_kdv") t.time_kdv = v;
  else return false;
  return true;
}

}  // namespace

void apply_line(RunConfig& cfg, std::string& section, const std::string& raw,
                const std::string& where) {
  std::string line = raw;
  if (const size_t hash = line.find('#'); hash != std::string::npos) {
    line.erase(hash);
  }
  line = trim(line);
  if (line.empty()) return;

  if (line.front() == '[') {
    if (line.back() != ']') throw ConfigError(where + ": unterminated section header");
    section = trim(line.substr(1, line.size() - 2));
    if (section != "grid" && section != "tolerances") {
      throw ConfigError(where + ": unknown section [" + section + "]");
    }
    return;
  }

  const size_t eq = line.find('=');
  if (eq == std::string::npos) throw ConfigError(where + ": expected key = value");
  const std::string key = trim(line.substr(0, eq));
  const std::string val = trim(line.substr(eq + 1));
  if (key.empty()) throw ConfigError(where + ": missing key");
  if (val.empty()) throw ConfigError(where + ": missing value for '" + key + "'");

  if (section.empty()) {
    if (key == "g2") cfg.g2 = parse_double(val, where);
    else if (key == "g3") cfg.g3 = parse_double(val, where);
    else if (key == "deltas") cfg.deltas = parse_list(val, where);
    else if (key == "b") cfg.b = parse_double(val, where);
    else if (key == "out_dir") cfg.out_dir = val;
    else throw ConfigError(where + ": unknown key '" + key + "'");
  } else if (section == "grid") {
    if (key == "x_min") cfg.grid.x_min = parse_double(val, where);
    else if (key == "x_max") cfg.grid.x_max = parse_double(val, where);
    else if (key == "n_points") cfg.grid.n_points = parse_int(val, where);
    else if (key == "pole_mask_radius") cfg.grid.pole_mask_radius = parse_double(val, where);
    else throw ConfigError(where + ": unknown grid key '" + key + "'");
  } else {
    if (!set_tolerance(cfg.tolerances, key, parse_double(val, where))) {
      throw ConfigError(where + ": unknown tolerance key '" + key + "'");
    }
  }
}

void apply_param(RunConfig& cfg, const std::string& kv) {
  if (!kv.empty() && kv.front() == '[') {
    throw ConfigError("--param expects key=value, not a section header");
  }
  std::string section;
  apply_line(cfg, section, kv, "--param " + kv);
}

void apply_grid(RunConfig& cfg, const std::string& triple) {
  const std::string where = "--grid " + triple;
  const auto parts = [&] {
    std::vector<std::string> out;
    std::stringstream ss(triple);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(trim(item));
    return out;
  }();
  if (parts.size() != 3) throw ConfigError(where + ": expected min,max,n");
  cfg.grid.x_min = parse_double(parts[0], where);
  cfg.grid.x_max = parse_double(parts[1], where);
  cfg.grid.n_points = parse_int(parts[2], where);
  try {
    cfg.grid.validate();
  } catch (const std::exception& e) {
    throw ConfigError(where + ": " + e.what());
  }
}

void apply_tolerance(RunConfig& cfg, const std::string& kv) {
  std::string section = "tolerances";
  apply_line(cfg, section, kv, "--tol " + kv);
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  RunConfig cfg;
  std::string section;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    apply_line(cfg, section, line, path + ":" + std::to_string(lineno));
  }
  return cfg;
}

}  // namespace ellsol::cli
