#include <doctest.h>

#include <cmath>

#include "optomech/config.hpp"
#include "optomech/lattice.hpp"
#include "test_helpers.hpp"

using namespace optomech;
using testutil::rel_close;

namespace {

// Realistic optical-lattice numbers: 1000 Rb atoms, lambda/2 spacing.
LatticeParams reference_params() {
  LatticeParams p;
  p.n_sites = 1000;
  p.spacing_d = 390e-9;
  p.dipole_mu = 5e-29;
  p.angle_alpha = M_PI / 2;
  p.omega_a = 2.5e15;
  p.omega_c = 2.5e15;
  p.mode_volume_V = 1e-10;
  return p;
}

} // namespace

TEST_CASE("dipole-dipole coupling") {
  LatticeParams p = reference_params();

  SUBCASE("magic angle zero") {
    p.angle_alpha = std::acos(1.0 / std::sqrt(3.0));
    CHECK(std::abs(dipole_dipole_J(p)) < 1e-12 * std::abs(dipole_dipole_J(reference_params())));
  }

  SUBCASE("1/d^3 scaling at alpha = pi/2") {
    const double j1 = dipole_dipole_J(p);
    p.spacing_d *= 2.0;
    CHECK(rel_close(dipole_dipole_J(p), j1 / 8.0, 1e-12));
  }

  SUBCASE("independent hand evaluation") {
    // mu^2 (1 - 3 cos^2(pi/2)) / (4 pi eps0 hbar d^3), evaluated in a separate
    // script with CODATA 2018 constants
    CHECK(rel_close(dipole_dipole_J(p), 3.591794101220808e6, 1e-12));
  }

  SUBCASE("parameter validation") {
    p.spacing_d = 0;
    CHECK_THROWS_AS(dipole_dipole_J(p), std::invalid_argument);
    p = reference_params();
    p.angle_alpha = 3.5;
    CHECK_THROWS_AS(dipole_dipole_J(p), std::invalid_argument);
    p = reference_params();
    p.n_sites = 1;
    CHECK_THROWS_AS(dipole_dipole_J(p), std::invalid_argument);
  }
}

TEST_CASE("exciton frequencies") {
  LatticeParams p = reference_params();

  SUBCASE("J = 0 collapses the band") {
    p.angle_alpha = std::acos(1.0 / std::sqrt(3.0));
    for (int k : {1, 7, 500}) CHECK(rel_close(exciton_frequency(p, k), p.omega_a, 1e-14));
  }

  SUBCASE("band centre at k = (N+1)/2") {
    p.n_sites = 11;
    CHECK(rel_close(exciton_frequency(p, 6), p.omega_a, 1e-14));
  }

  SUBCASE("N = 3, k = 1") {
    p.n_sites = 3;
    const double j = dipole_dipole_J(p);
    CHECK(rel_close(exciton_frequency(p, 1), p.omega_a + std::sqrt(2.0) * j, 1e-13));
  }

  SUBCASE("band bounds") {
    p.angle_alpha = 0.3;
    const double j = dipole_dipole_J(p);
    for (int k = 1; k <= p.n_sites; k += 97) {
      const double w = exciton_frequency(p, k);
      CHECK(w >= p.omega_a - 2 * std::abs(j) - 1e-3);
      CHECK(w <= p.omega_a + 2 * std::abs(j) + 1e-3);
    }
  }

  SUBCASE("k out of range") {
    CHECK_THROWS_AS(exciton_frequency(p, 0), std::out_of_range);
    CHECK_THROWS_AS(exciton_frequency(p, p.n_sites + 1), std::out_of_range);
  }
}

TEST_CASE("exciton-cavity couplings") {
  const LatticeParams p = reference_params();

  SUBCASE("literature estimates within 5%") {
    const double f1 = exciton_cavity_coupling(p, 1);
    const double f3 = exciton_cavity_coupling(p, 3);
    CHECK(std::abs(f1 - 1.6e8) / 1.6e8 < 0.05);
    CHECK(std::abs(f3 - 5.3e7) / 5.3e7 < 0.05);
  }

  SUBCASE("even k decouples") {
    CHECK_THROWS_WITH_AS(exciton_cavity_coupling(p, 2),
                         doctest::Contains("even-k modes decouple"), std::invalid_argument);
  }

  SUBCASE("positive and strictly decreasing over odd k") {
    double prev = std::numeric_limits<double>::infinity();
    for (int k = 1; k <= 21; k += 2) {
      const double f = exciton_cavity_coupling(p, k);
      CHECK(f > 0);
      CHECK(f < prev);
      prev = f;
    }
  }

  SUBCASE("large-N amplitude ratio f1/f3 -> 3") {
    const double ratio = exciton_cavity_coupling(p, 1) / exciton_cavity_coupling(p, 3);
    CHECK(std::abs(ratio - 3.0) < 1e-3);
  }
}

TEST_CASE("site-exciton transformation is orthogonal") {
  for (int n : {2, 5, 8}) {
    const Eigen::MatrixXd t = exciton_transform(n);
    const Eigen::MatrixXd id = t * t.transpose();
    CHECK((id - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("drive-unit export") {
  LatticeParams p = reference_params();
  p.omega_c = p.omega_a + 4e8;  // detuned cavity
  const double gamma = 1e6;
  const DriveUnits u = to_drive_units(p, gamma);
  const double omega1 = exciton_frequency(p, 1);
  CHECK(rel_close(u.delta, 0.5 * (p.omega_c - omega1) / gamma, 1e-12));
  CHECK(rel_close(u.f1, exciton_cavity_coupling(p, 1) / gamma, 1e-12));
  CHECK(rel_close(u.Omega, std::hypot(u.f1, u.delta), 1e-12));
  CHECK_THROWS_AS(to_drive_units(p, 0.0), std::invalid_argument);
}

TEST_CASE("lattice parameters from config") {
  const auto cfg = KeyValueConfig::from_string(
      "n_sites = 1000\n"
      "spacing_d = 390e-9\n"
      "dipole_mu = 5e-29   # C m\n"
      "angle_alpha = 1.5707963267948966\n"
      "omega_a = 2.5e15\n"
      "omega_c = 2.5e15\n"
      "mode_volume_V = 1e-10\n");
  const LatticeParams p = lattice_params_from_config(cfg);
  CHECK(p.n_sites == 1000);
  CHECK(rel_close(exciton_cavity_coupling(p, 1),
                  exciton_cavity_coupling(reference_params(), 1), 1e-14));

  CHECK_THROWS(lattice_params_from_config(KeyValueConfig::from_string("n_sites = 4\n")));
  CHECK_THROWS(KeyValueConfig::from_string("spacing_d 390e-9\n"));
  CHECK_THROWS(KeyValueConfig::from_string("spacing_d = abc\n"));
}

TEST_CASE("drive parameters from config") {
  const auto p = drive_params_from_config(
      KeyValueConfig::from_string("gamma = 2\ndelta = 0.5\nE_L = 3\nomega_m = 7\n"));
  CHECK(p.gamma == 2.0);
  CHECK(p.gamma_m == 4.0);  // defaults to 2*gamma
  CHECK(p.delta == 0.5);
  CHECK(p.f1 == 0.0);
  CHECK(p.omega_m == 7.0);
  const auto q = drive_params_from_config(
      KeyValueConfig::from_string("gamma = 2\ngamma_m = 3\nomega_m = 7\n"));
  CHECK(q.gamma_m == 3.0);
  CHECK_THROWS_AS(drive_params_from_config(KeyValueConfig::from_string("gamma = -1\n")),
                  std::invalid_argument);
}
