#include <doctest.h>

#include <cmath>
#include <complex>

#include <Eigen/Dense>

#include "optomech/working_point.hpp"
#include "test_helpers.hpp"

using namespace optomech;
using testutil::rel_close;
using cd = std::complex<double>;

namespace {

// Independent oracle: solve the amplitude equations by Cramer's rule and the
// displacement equation by a dense scan + bisection. Shares no code with the
// library's damped fixed-point path.
struct OracleResult {
  double q;
  cd psi, phi;
};

OracleResult oracle_solve(const DriveParams& p) {
  const double omega = std::hypot(p.f1, p.delta);
  const double phi_ang = (omega == 0.0) ? M_PI / 4 : std::acos(std::sqrt(0.5 + p.delta / (2 * omega)));
  const double g_mix = p.G0 * std::sin(2 * phi_ang);

  auto amplitudes = [&](double q) {
    const cd m11(p.gamma, (p.Delta_L - 0.5 * q * p.G0) - (omega - 0.5 * q * p.G0 * std::cos(2 * phi_ang)));
    const cd m22(p.gamma, (p.Delta_L - 0.5 * q * p.G0) + (omega - 0.5 * q * p.G0 * std::cos(2 * phi_ang)));
    const cd m12(0.0, 0.5 * g_mix * q);
    const cd det = m11 * m22 - m12 * m12;
    const cd b1(-p.E_L * std::sin(phi_ang), 0.0);
    const cd b2(p.E_L * std::cos(phi_ang), 0.0);
    const cd psi = (b1 * m22 - m12 * b2) / det;
    const cd phi = (m11 * b2 - m12 * b1) / det;
    return std::pair<cd, cd>(psi, phi);
  };
  auto g = [&](double q) {
    const auto [psi, phi] = amplitudes(q);
    const cd a_s = phi * std::cos(phi_ang) - psi * std::sin(phi_ang);
    return q - p.G0 / p.omega_m * std::norm(a_s);
  };

  const double bound = 2.1 * std::abs(p.G0) / p.omega_m * p.E_L * p.E_L / (p.gamma * p.gamma) + 1e-9;
  double lo = 0, hi = bound;
  double glo = g(lo);
  double root = 0;
  bool found = std::abs(glo) < 1e-14;
  const int n = 20000;
  for (int i = 1; i <= n && !found; ++i) {
    const double q = lo + (hi - lo) * i / n;
    const double gq = g(q);
    if (glo * gq <= 0.0) {
      double a = lo + (hi - lo) * (i - 1) / n, b = q, ga = glo;
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (a + b);
        if (ga * g(mid) <= 0) b = mid; else { a = mid; ga = g(mid); }
      }
      root = 0.5 * (a + b);
      found = true;
    }
    glo = gq;
  }
  REQUIRE(found);
  const auto [psi, phi] = amplitudes(root);
  return {root, psi, phi};
}

} // namespace

TEST_CASE("polariton rotation angle") {
  SUBCASE("resonant: maximally mixed") {
    const auto b = polariton_angle(0.0, 3.0);
    CHECK(rel_close(b.phi, M_PI / 4, 1e-14));
    CHECK(rel_close(b.Omega, 3.0, 1e-14));
  }
  SUBCASE("large detuning: purely atomic/photonic") {
    const auto b = polariton_angle(1e6, 1.0);
    CHECK(b.phi < 1e-3);
  }
  SUBCASE("3-4-5 triangle") {
    const auto b = polariton_angle(3.0, 4.0);
    CHECK(rel_close(b.Omega, 5.0, 1e-14));
    const double c = std::cos(b.phi);
    CHECK(rel_close(c * c, 0.8, 1e-14));
  }
  SUBCASE("degenerate convention") {
    CHECK(rel_close(polariton_angle(0.0, 0.0).phi, M_PI / 4, 1e-14));
  }
  SUBCASE("angle stays in [0, pi/2]") {
    testutil::Rng rng(7);
    for (int i = 0; i < 200; ++i) {
      const auto b = polariton_angle(rng.uniform(-50, 50), rng.uniform(0, 20));
      CHECK(b.phi >= 0.0);
      CHECK(b.phi <= M_PI / 2);
    }
  }
}

TEST_CASE("steady state: decoupled limits") {
  DriveParams p;
  p.gamma = 1;
  p.delta = 0.5;
  p.f1 = 2.0;
  p.Delta_L = 3.0;
  p.omega_m = 5.0;

  SUBCASE("G0 = 0 reduces to the closed linear solve") {
    p.E_L = 4.0;
    p.G0 = 0.0;
    const WorkingPoint wp = solve_steady_state(p);
    CHECK(wp.q_s == 0.0);
    CHECK(wp.G_psi == 0.0);
    CHECK(wp.G_phi == 0.0);
    CHECK(wp.G_q == 0.0);
    const auto o = oracle_solve(p);
    // library output is phase-rotated; compare moduli and the invariant a_s
    CHECK(rel_close(std::abs(wp.psi_s), std::abs(o.psi), 1e-10));
    CHECK(rel_close(std::abs(wp.phi_s), std::abs(o.phi), 1e-10));
  }

  SUBCASE("E_L = 0 is the trivial point") {
    p.E_L = 0.0;
    p.G0 = 0.7;
    const WorkingPoint wp = solve_steady_state(p);
    CHECK(wp.q_s == 0.0);
    CHECK(std::abs(wp.psi_s) == 0.0);
    CHECK(std::abs(wp.phi_s) == 0.0);
    CHECK(wp.G_psi == 0.0);
    CHECK(wp.G_phi == 0.0);
    CHECK(wp.G_q == 0.0);
  }
}

TEST_CASE("steady state vs independent root-finding oracle") {
  DriveParams p;
  p.gamma = 1;
  p.delta = 0.0;
  p.f1 = 4.0;
  p.Delta_L = 10.0;
  p.omega_m = 10.0;
  p.E_L = 3.0;
  p.G0 = 0.2;

  const WorkingPoint wp = solve_steady_state(p);
  const OracleResult o = oracle_solve(p);
  CHECK(rel_close(wp.q_s, o.q, 1e-8));
  CHECK(rel_close(std::abs(wp.psi_s), std::abs(o.psi), 1e-8));
  CHECK(rel_close(std::abs(wp.phi_s), std::abs(o.phi), 1e-8));
  CHECK(wp.residual < 1e-10);

  SUBCASE("couplings are real multiples of the cavity amplitude") {
    // G_psi = sqrt(2) G0 sin(phi) a_s and G_phi = sqrt(2) G0 cos(phi) a_s
    const cd a_s = wp.phi_s * std::cos(wp.phi) - wp.psi_s * std::sin(wp.phi);
    CHECK(std::abs(a_s.imag()) < 1e-12 * std::abs(a_s));
    CHECK(rel_close(wp.G_psi, std::sqrt(2.0) * p.G0 * std::sin(wp.phi) * a_s.real(), 1e-10));
    CHECK(rel_close(wp.G_q, 0.5 * p.G0 * std::sin(2 * wp.phi) * wp.q_s, 1e-12));
  }
}

TEST_CASE("working-point identities") {
  testutil::Rng rng(42);
  int solved = 0;
  for (int i = 0; i < 40; ++i) {
    DriveParams p;
    p.gamma = 1;
    p.delta = rng.uniform(-2, 2);
    p.f1 = rng.uniform(0, 5);
    p.Delta_L = rng.uniform(-5, 15);
    p.omega_m = rng.uniform(2, 20);
    p.E_L = rng.uniform(0, 4);
    p.G0 = rng.uniform(0, 0.4);
    WorkingPoint wp;
    try {
      wp = second_rotation(solve_steady_state(p));
    } catch (const MultistabilityError&) {
      continue;
    } catch (const SteadyStateError&) {
      continue;
    }
    ++solved;

    // G_psi = G_phi tan(phi) and G_theta = -G_pi tan(phi + varphi)
    const double scale1 = std::max({std::abs(wp.G_psi), std::abs(wp.G_phi), 1e-30});
    CHECK(std::abs(wp.G_psi - wp.G_phi * std::tan(wp.phi)) <= 1e-10 * scale1);
    const double scale2 = std::max({std::abs(wp.G_theta), std::abs(wp.G_pi), 1e-30});
    CHECK(std::abs(wp.G_theta + wp.G_pi * std::tan(wp.phi + wp.varphi)) <= 1e-10 * scale2);

    CHECK(wp.q_s >= 0.0);  // G0 >= 0
    CHECK(rel_close(wp.U, std::hypot(wp.Omega_tilde, wp.G_q), 1e-12));
    CHECK(wp.varphi >= 0.0);
    if (wp.Omega_tilde >= 0.0) CHECK(wp.varphi <= M_PI / 4 + 1e-12);
    if (p.G0 == 0.0) CHECK(wp.varphi == 0.0);
  }
  CHECK(solved >= 30);
}

TEST_CASE("second rotation limits") {
  SUBCASE("G_q = 0") {
    WorkingPoint wp;
    wp.G_psi = 0.7;
    wp.G_phi = 1.3;
    wp.Omega_tilde = 2.0;
    wp.G_q = 0.0;
    wp = second_rotation(wp);
    CHECK(wp.varphi == 0.0);
    CHECK(rel_close(wp.G_theta, 0.7, 1e-14));
    CHECK(rel_close(wp.G_pi, -1.3, 1e-14));
  }
  SUBCASE("phi = varphi = pi/4 kills G_pi") {
    WorkingPoint wp;
    wp.phi = M_PI / 4;
    wp.G_psi = 1.1;
    wp.G_phi = 1.1;   // resonant polaritons couple equally
    wp.Omega_tilde = 0.0;
    wp.G_q = 5.0;     // G_q >> Omega_tilde
    wp = second_rotation(wp);
    CHECK(rel_close(wp.varphi, M_PI / 4, 1e-12));
    CHECK(std::abs(wp.G_pi) < 1e-12);
  }
  SUBCASE("phi + varphi = pi/4 defines G_t") {
    WorkingPoint wp;
    wp.phi = M_PI / 8;
    wp.G_phi = 2.0;
    wp.G_psi = 2.0 * std::tan(M_PI / 8);
    wp.G_q = std::sin(M_PI / 4);     // varphi = pi/8
    wp.Omega_tilde = std::cos(M_PI / 4);
    wp = second_rotation(wp);
    CHECK(rel_close(wp.varphi, M_PI / 8, 1e-12));
    CHECK(rel_close(wp.G_theta, -wp.G_pi, 1e-10));
    CHECK(wp.has_G_t);
    CHECK(rel_close(wp.G_t, wp.G_theta, 1e-14));
  }
}

TEST_CASE("multistability is detected, not selected") {
  // strong drive on a far-detuned photonic branch: classic bistable response
  DriveParams p;
  p.gamma = 1;
  p.delta = 2.0;
  p.f1 = 0.0;     // phi = 0, cavity-only branch
  p.Delta_L = 3.0;
  p.omega_m = 1.0;
  p.E_L = 2.0;
  p.G0 = 2.0;
  CHECK_THROWS_AS(solve_steady_state(p), MultistabilityError);
  try {
    solve_steady_state(p);
  } catch (const MultistabilityError& e) {
    CHECK(e.branches.size() >= 2);
  }
}

TEST_CASE("drive parameter validation") {
  DriveParams p;
  p.gamma = -1;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = DriveParams{};
  p.omega_m = 0;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = DriveParams{};
  p.E_L = -2;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}
