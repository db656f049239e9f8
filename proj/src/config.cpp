#include "nulgi/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "nulgi/osc_model.hpp"

namespace nulgi {

std::string format_sig(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string csv_row(const std::vector<std::string>& cells) {
  std::string row;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) row += ',';
    row += cells[i];
  }
  row += '\n';
  return row;
}

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

double parse_double(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const double x = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("trailing characters");
    return x;
  } catch (const std::exception&) {
    throw ConfigError("config key '" + key + "': cannot parse '" + v +
                      "' as a number");
  }
}

std::uint64_t parse_u64(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const unsigned long long x = std::stoull(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("trailing characters");
    return x;
  } catch (const std::exception&) {
    throw ConfigError("config key '" + key + "': cannot parse '" + v +
                      "' as a nonnegative integer");
  }
}

int parse_steps(const std::string& key, const std::string& v) {
  const auto n = parse_u64(key, v);
  if (n < 1 || n > 1000000) {
    throw ConfigError("config key '" + key + "': steps out of range");
  }
  return static_cast<int>(n);
}

std::vector<double> parse_list(const std::string& key, const std::string& v) {
  std::vector<double> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) {
      throw ConfigError("config key '" + key + "': empty list element");
    }
    out.push_back(parse_double(key, item));
  }
  if (out.empty()) {
    throw ConfigError("config key '" + key + "': empty list");
  }
  return out;
}

std::vector<double> to_radians(std::vector<double> degs) {
  for (double& d : degs) d = deg_to_rad(d);
  return degs;
}

}  // namespace

RunConfigFile RunConfigFile::parse(const std::string& text) {
  RunConfigFile cfg;

  using Handler = std::function<void(const std::string&, const std::string&)>;
  const std::map<std::string, Handler> handlers = {
      {"dm21_sq", [&](auto& k, auto& v) { cfg.params.dm21_sq = parse_double(k, v); }},
      {"dm31_sq", [&](auto& k, auto& v) { cfg.params.dm31_sq = parse_double(k, v); }},
      {"theta12_deg", [&](auto& k, auto& v) { cfg.params.theta12 = deg_to_rad(parse_double(k, v)); }},
      {"theta13_deg", [&](auto& k, auto& v) { cfg.params.theta13 = deg_to_rad(parse_double(k, v)); }},
      {"theta23_deg", [&](auto& k, auto& v) { cfg.params.theta23 = deg_to_rad(parse_double(k, v)); }},
      {"delta_cp_deg", [&](auto& k, auto& v) { cfg.params.delta_cp = deg_to_rad(parse_double(k, v)); }},
      {"energy_gev", [&](auto& k, auto& v) { cfg.params.energy = parse_double(k, v) * kGevToEv; }},
      {"rho", [&](auto& k, auto& v) { cfg.rho = parse_double(k, v); }},
      {"ye", [&](auto& k, auto& v) { cfg.ye = parse_double(k, v); }},
      {"alpha_override", [&](auto& k, auto& v) { cfg.params.alpha_override = parse_double(k, v); }},
      {"l1_km", [&](auto& k, auto& v) { cfg.schedule.l1_km = parse_double(k, v); }},
      {"dl_km", [&](auto& k, auto& v) { cfg.schedule.spacing_km = parse_double(k, v); }},
      {"grid_l1_min", [&](auto& k, auto& v) { cfg.grid.l1_min_km = parse_double(k, v); }},
      {"grid_l1_max", [&](auto& k, auto& v) { cfg.grid.l1_max_km = parse_double(k, v); }},
      {"grid_l1_steps", [&](auto& k, auto& v) { cfg.grid.l1_steps = parse_steps(k, v); }},
      {"grid_dl_min", [&](auto& k, auto& v) { cfg.grid.dl_min_km = parse_double(k, v); }},
      {"grid_dl_max", [&](auto& k, auto& v) { cfg.grid.dl_max_km = parse_double(k, v); }},
      {"grid_dl_steps", [&](auto& k, auto& v) { cfg.grid.dl_steps = parse_steps(k, v); }},
      {"sweep_theta13_deg", [&](auto& k, auto& v) { cfg.sweep_theta13 = to_radians(parse_list(k, v)); }},
      {"sweep_alpha", [&](auto& k, auto& v) { cfg.sweep_alpha = parse_list(k, v); }},
      {"sweep_delta_cp_deg", [&](auto& k, auto& v) { cfg.sweep_delta_cp = to_radians(parse_list(k, v)); }},
      {"n_runs", [&](auto& k, auto& v) { cfg.sim.n_runs = parse_u64(k, v); }},
      {"seed", [&](auto& k, auto& v) { cfg.sim.seed = parse_u64(k, v); }},
  };

  std::set<std::string> seen;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(lineno) +
                        ": expected 'key = value'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const auto it = handlers.find(key);
    if (it == handlers.end()) {
      throw ConfigError("config line " + std::to_string(lineno) +
                        ": unknown key '" + key + "'");
    }
    if (!seen.insert(key).second) {
      throw ConfigError("config line " + std::to_string(lineno) +
                        ": duplicate key '" + key + "'");
    }
    it->second(key, value);
  }

  try {
    cfg.params.potential = potential_from_density(cfg.rho, cfg.ye);
  } catch (const std::domain_error& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  cfg.check();
  return cfg;
}

RunConfigFile RunConfigFile::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open config file '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

void RunConfigFile::check() const {
  if (!(rho >= 0.0)) throw ConfigError("config key 'rho': must be >= 0");
  if (!(ye >= 0.0 && ye <= 1.0)) {
    throw ConfigError("config key 'ye': must be in [0, 1]");
  }
  try {
    params.validate();
    schedule.validate();
    grid.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  if (sim.n_runs < 1) throw ConfigError("config key 'n_runs': must be >= 1");
  for (const double a : sweep_alpha) {
    if (!std::isfinite(a)) throw ConfigError("config key 'sweep_alpha': nan");
  }
}

std::string RunConfigFile::echo() const {
  std::ostringstream out;
  const auto put = [&](const char* key, double v) {
    out << key << " = " << format_sig(v) << "\n";
  };
  out << "# normalized internal values (radians, eV)\n";
  put("dm21_sq_ev2", params.dm21_sq);
  put("dm31_sq_ev2", params.dm31_sq);
  put("theta12_rad", params.theta12);
  put("theta13_rad", params.theta13);
  put("theta23_rad", params.theta23);
  put("delta_cp_rad", params.delta_cp);
  put("energy_ev", params.energy);
  put("potential_ev", params.potential);
  put("alpha", params.alpha());
  out << "alpha_override = "
      << (params.alpha_override ? format_sig(*params.alpha_override)
                                : std::string("none"))
      << "\n";
  put("l1_km", schedule.l1_km);
  put("dl_km", schedule.spacing_km);
  put("grid_l1_min_km", grid.l1_min_km);
  put("grid_l1_max_km", grid.l1_max_km);
  out << "grid_l1_steps = " << grid.l1_steps << "\n";
  put("grid_dl_min_km", grid.dl_min_km);
  put("grid_dl_max_km", grid.dl_max_km);
  out << "grid_dl_steps = " << grid.dl_steps << "\n";
  const auto put_list = [&](const char* key, const std::vector<double>& vs) {
    out << key << " =";
    for (std::size_t i = 0; i < vs.size(); ++i) {
      out << (i ? "," : " ") << format_sig(vs[i]);
    }
    out << "\n";
  };
  put_list("sweep_theta13_rad", sweep_theta13);
  put_list("sweep_alpha", sweep_alpha);
  put_list("sweep_delta_cp_rad", sweep_delta_cp);
  out << "n_runs = " << sim.n_runs << "\n";
  out << "seed = " << sim.seed << "\n";
  return out.str();
}

}  // namespace nulgi
