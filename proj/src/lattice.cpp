#include "optomech/lattice.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace optomech {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

void LatticeParams::validate() const {
  if (n_sites < 2) throw std::invalid_argument("LatticeParams: n_sites must be >= 2");
  if (!(spacing_d > 0)) throw std::invalid_argument("LatticeParams: spacing_d must be > 0");
  if (!(dipole_mu > 0)) throw std::invalid_argument("LatticeParams: dipole_mu must be > 0");
  if (!(omega_a > 0)) throw std::invalid_argument("LatticeParams: omega_a must be > 0");
  if (!(omega_c > 0)) throw std::invalid_argument("LatticeParams: omega_c must be > 0");
  if (!(mode_volume_V > 0)) throw std::invalid_argument("LatticeParams: mode_volume_V must be > 0");
  if (!(angle_alpha >= 0 && angle_alpha <= kPi))
    throw std::invalid_argument("LatticeParams: angle_alpha must lie in [0, pi]");
}

double dipole_dipole_J(const LatticeParams& p) {
  p.validate();
  const double c = std::cos(p.angle_alpha);
  return p.dipole_mu * p.dipole_mu * (1.0 - 3.0 * c * c) /
         (4.0 * kPi * constants::epsilon0 * constants::hbar * std::pow(p.spacing_d, 3));
}

double exciton_frequency(const LatticeParams& p, int k) {
  p.validate();
  if (k < 1 || k > p.n_sites)
    throw std::out_of_range("exciton_frequency: k must satisfy 1 <= k <= N, got k=" +
                            std::to_string(k));
  return p.omega_a + 2.0 * dipole_dipole_J(p) * std::cos(kPi * k / (p.n_sites + 1));
}

double exciton_cavity_coupling(const LatticeParams& p, int k) {
  p.validate();
  if (k < 1 || k > p.n_sites)
    throw std::out_of_range("exciton_cavity_coupling: k must satisfy 1 <= k <= N, got k=" +
                            std::to_string(k));
  if (k % 2 == 0)
    throw std::invalid_argument("exciton_cavity_coupling: even-k modes decouple from the cavity"
                                " (k=" + std::to_string(k) + ")");
  const double prefactor = std::sqrt(p.omega_c * p.dipole_mu * p.dipole_mu /
                                     (constants::hbar * constants::epsilon0 * p.mode_volume_V *
                                      (p.n_sites + 1)));
  return prefactor / std::tan(kPi * k / (2.0 * (p.n_sites + 1)));
}

Eigen::MatrixXd exciton_transform(int n_sites) {
  if (n_sites < 1) throw std::invalid_argument("exciton_transform: n_sites must be >= 1");
  const int n = n_sites;
  Eigen::MatrixXd t(n, n);
  const double norm = std::sqrt(2.0 / (n + 1));
  for (int site = 1; site <= n; ++site)
    for (int k = 1; k <= n; ++k)
      t(site - 1, k - 1) = norm * std::sin(kPi * site * k / (n + 1));
  return t;
}

DriveUnits to_drive_units(const LatticeParams& p, double gamma) {
  if (!(gamma > 0)) throw std::invalid_argument("to_drive_units: gamma must be > 0");
  const double omega_1 = exciton_frequency(p, 1);
  const double delta = 0.5 * (p.omega_c - omega_1);
  const double f1 = exciton_cavity_coupling(p, 1);
  return DriveUnits{delta / gamma, f1 / gamma, std::hypot(f1, delta) / gamma};
}

} // namespace optomech
