#pragma once

#include <Eigen/Dense>

namespace optomech {

// CODATA 2018 values. The lattice module is the only place SI units appear;
// everything downstream works in units of the common damping rate gamma.
namespace constants {
inline constexpr double hbar = 1.054571817e-34;     // J s
inline constexpr double epsilon0 = 8.8541878128e-12; // F/m
}

struct LatticeParams {
  int n_sites = 2;            // N
  double spacing_d = 0;       // m
  double dipole_mu = 0;       // C m
  double angle_alpha = 0;     // rad, dipole orientation vs lattice axis
  double omega_a = 0;         // rad/s, atomic transition
  double omega_c = 0;         // rad/s, cavity mode
  double mode_volume_V = 0;   // m^3

  void validate() const;      // throws std::invalid_argument
};

/// Nearest-neighbour dipole-dipole shift J_alpha [rad/s].
double dipole_dipole_J(const LatticeParams& p);

/// Frequency of the k-th exciton mode, 1 <= k <= N [rad/s].
double exciton_frequency(const LatticeParams& p, int k);

/// Coupling of the k-th exciton to the cavity mode [rad/s]. Odd k only;
/// even-k modes decouple from the cavity and are rejected.
double exciton_cavity_coupling(const LatticeParams& p, int k);

/// Site <-> exciton transformation matrix, T(n,k) = sqrt(2/(N+1)) sin(pi n k/(N+1)).
/// Orthogonal; exposed for testing, no dynamics run in this basis.
Eigen::MatrixXd exciton_transform(int n_sites);

struct DriveUnits {
  double delta;   // (omega_c - omega_1)/2 in units of gamma
  double f1;      // exciton-cavity coupling in units of gamma
  double Omega;   // polariton splitting sqrt(f1^2 + delta^2) in units of gamma
};

/// Export the dimensionless quantities the drive-level modules consume.
DriveUnits to_drive_units(const LatticeParams& p, double gamma);

} // namespace optomech
