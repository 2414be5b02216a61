#include "optomech/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace optomech {

namespace {
std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}
} // namespace

KeyValueConfig KeyValueConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("config: cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return from_string(buf.str());
}

KeyValueConfig KeyValueConfig::from_string(const std::string& text) {
  KeyValueConfig cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("config: line " + std::to_string(lineno) + " is not key=value");
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (key.empty()) throw std::runtime_error("config: empty key on line " + std::to_string(lineno));
    try {
      std::size_t used = 0;
      const double x = std::stod(val, &used);
      if (used != val.size())
        throw std::invalid_argument("trailing characters");
      cfg.values_[key] = x;
    } catch (const std::exception&) {
      throw std::runtime_error("config: cannot parse value '" + val + "' for key '" + key +
                               "' on line " + std::to_string(lineno));
    }
  }
  return cfg;
}

bool KeyValueConfig::has(const std::string& key) const { return values_.count(key) > 0; }

double KeyValueConfig::get(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) throw std::runtime_error("config: missing key '" + key + "'");
  return it->second;
}

double KeyValueConfig::get_or(const std::string& key, double fallback) const {
  const auto it = values_.find(key);
  return it == values_.end() ? fallback : it->second;
}

void KeyValueConfig::set(const std::string& key, double value) { values_[key] = value; }

LatticeParams lattice_params_from_config(const KeyValueConfig& cfg) {
  LatticeParams p;
  p.n_sites = static_cast<int>(std::llround(cfg.get("n_sites")));
  p.spacing_d = cfg.get("spacing_d");
  p.dipole_mu = cfg.get("dipole_mu");
  p.angle_alpha = cfg.get("angle_alpha");
  p.omega_a = cfg.get("omega_a");
  p.omega_c = cfg.get("omega_c");
  p.mode_volume_V = cfg.get("mode_volume_V");
  p.validate();
  return p;
}

DriveParams drive_params_from_config(const KeyValueConfig& cfg) {
  DriveParams p;
  p.gamma = cfg.get_or("gamma", 1.0);
  p.gamma_m = cfg.get_or("gamma_m", 2.0 * p.gamma);
  p.delta = cfg.get_or("delta", 0.0);
  p.f1 = cfg.get_or("f1", 0.0);
  p.Delta_L = cfg.get_or("Delta_L", 0.0);
  p.E_L = cfg.get_or("E_L", 0.0);
  p.G0 = cfg.get_or("G0", 0.0);
  p.omega_m = cfg.get_or("omega_m", 1.0);
  p.validate();
  return p;
}

} // namespace optomech
