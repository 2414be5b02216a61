#pragma once

#include <map>
#include <optional>
#include <string>

#include "optomech/lattice.hpp"
#include "optomech/working_point.hpp"

namespace optomech {

/// Flat key=value config file. '#' starts a comment, blank lines ignored,
/// values parsed as doubles (n_sites as integer).
class KeyValueConfig {
 public:
  static KeyValueConfig from_file(const std::string& path);   // throws on parse error
  static KeyValueConfig from_string(const std::string& text);

  bool has(const std::string& key) const;
  double get(const std::string& key) const;                   // throws if missing
  double get_or(const std::string& key, double fallback) const;
  void set(const std::string& key, double value);

  const std::map<std::string, double>& values() const { return values_; }

 private:
  std::map<std::string, double> values_;
};

/// Keys: n_sites, spacing_d, dipole_mu, angle_alpha, omega_a, omega_c, mode_volume_V.
LatticeParams lattice_params_from_config(const KeyValueConfig& cfg);

/// Keys: gamma, gamma_m, delta, f1, Delta_L, E_L, G0, omega_m (units of gamma).
/// gamma_m defaults to 2*gamma when absent.
DriveParams drive_params_from_config(const KeyValueConfig& cfg);

} // namespace optomech
