#include <doctest.h>

#include <cmath>

#include "optomech/gaussian.hpp"
#include "optomech/stochastic.hpp"
#include "test_helpers.hpp"

using namespace optomech;

namespace {

LinearGaussianModel free_thermal(double gamma, double n_bar) {
  LinearGaussianModel m;
  m.drift = -gamma * Eigen::MatrixXd::Identity(2, 2);
  m.diffusion = (2 * n_bar + 1) * gamma * Eigen::MatrixXd::Identity(2, 2);
  m.mode_labels = {"a"};
  m.gamma = gamma;
  m.bath = {n_bar, 0.0};
  return m;
}

SimConfig quick_config(std::uint64_t seed) {
  SimConfig cfg;
  cfg.dt = 0.02;
  cfg.burn_in = 8.0;
  cfg.sample_window = 40.0;
  cfg.n_trajectories = 120;
  cfg.seed = seed;
  return cfg;
}

void check_within_3se(const SimEstimate& est, const Eigen::MatrixXd& want) {
  for (int i = 0; i < want.rows(); ++i)
    for (int j = i; j < want.cols(); ++j) {
      CAPTURE(i);
      CAPTURE(j);
      CHECK(std::abs(est.v(i, j) - want(i, j)) <= 3.0 * est.std_err(i, j));
    }
}

} // namespace

TEST_CASE("free thermal mode variance") {
  const auto model = free_thermal(1.0, 0.9);
  const auto est = simulate(model, quick_config(7));
  check_within_3se(est, 1.4 * Eigen::MatrixXd::Identity(2, 2));
}

TEST_CASE("two-mode covariance within 3 standard errors of the Lyapunov solution") {
  const auto model = build_two_mode(1.0, 1.0, {0.0, 0.0});
  const auto est = simulate(model, quick_config(3));
  check_within_3se(est, solve_lyapunov(model).v);
}

TEST_CASE("squeezed-bath cross diffusion is realized") {
  const auto model = build_two_mode(1.2, 1.0, {0.5, 0.5});
  const auto est = simulate(model, quick_config(11));
  check_within_3se(est, solve_lyapunov(model).v);
}

TEST_CASE("reproducibility and seed sensitivity") {
  const auto model = build_two_mode(0.8, 1.0, {0.2, 0.0});
  SimConfig cfg = quick_config(42);
  cfg.n_trajectories = 100;
  cfg.sample_window = 10.0;
  const auto a = simulate(model, cfg);
  const auto b = simulate(model, cfg);
  CHECK((a.v - b.v).cwiseAbs().maxCoeff() == 0.0);
  CHECK((a.std_err - b.std_err).cwiseAbs().maxCoeff() == 0.0);
  cfg.seed = 43;
  const auto c = simulate(model, cfg);
  CHECK((a.v - c.v).cwiseAbs().maxCoeff() > 0.0);
}

TEST_CASE("discretization is exact, so dt carries no bias") {
  const auto model = build_two_mode(1.0, 1.0, {0.3, 0.0});

  SUBCASE("semigroup and stationarity identities") {
    // F(2dt) = F(dt)^2, Q(2dt) = F Q F^T + Q, and the Lyapunov covariance is a
    // fixed point of the chain at any dt: F V F^T + Q = V.
    for (double dt : {0.005, 0.02, 0.08}) {
      const auto s1 = one_step(model, dt);
      const auto s2 = one_step(model, 2 * dt);
      CHECK((s2.propagator - s1.propagator * s1.propagator).cwiseAbs().maxCoeff() < 1e-13);
      const Eigen::MatrixXd q2 =
          s1.propagator * s1.noise_cov * s1.propagator.transpose() + s1.noise_cov;
      CHECK((s2.noise_cov - q2).cwiseAbs().maxCoeff() < 1e-13);
      const Eigen::MatrixXd v = solve_lyapunov(model).v;
      const Eigen::MatrixXd vnext =
          s1.propagator * v * s1.propagator.transpose() + s1.noise_cov;
      CHECK((vnext - v).cwiseAbs().maxCoeff() < 1e-13);
    }
  }

  SUBCASE("halved dt stays within combined noise of the same target") {
    SimConfig coarse = quick_config(19);
    SimConfig fine = coarse;
    fine.dt = coarse.dt / 2.0;
    const auto a = simulate(model, coarse);
    const auto b = simulate(model, fine);
    const auto v = solve_lyapunov(model).v;
    check_within_3se(a, v);
    check_within_3se(b, v);
    for (int i = 0; i < 4; ++i)
      for (int j = i; j < 4; ++j) {
        const double se = std::hypot(a.std_err(i, j), b.std_err(i, j));
        CHECK(std::abs(a.v(i, j) - b.v(i, j)) <= 3.0 * se);
      }
  }
}

TEST_CASE("config invariants rejected") {
  const auto model = build_two_colour(1.0, 10.0, 1.0, {0.2, 0.0});
  SimConfig cfg = quick_config(1);
  cfg.dt = 0.05;  // dt * specrad ~ 0.5
  CHECK_THROWS_AS(simulate(model, cfg), std::invalid_argument);
  cfg = quick_config(1);
  cfg.n_trajectories = 50;
  CHECK_THROWS_AS(simulate(model, cfg), std::invalid_argument);
  CHECK_THROWS_AS(simulate(build_two_mode(2.5, 1.0, {}), quick_config(1)),
                  std::domain_error);
}

TEST_CASE("three-mode estimate reproduces a positive log-negativity") {
  const auto model = build_three_mode(1.0, 3.0, 1.0, {0.2, 0.0}, ThreeModeVariant::a1_a2);
  SimConfig cfg = quick_config(5);
  cfg.dt = 0.01;
  const auto est = simulate(model, cfg);
  const auto v = solve_lyapunov(model);
  check_within_3se(est, v.v);
  const double en_est = log_negativity(reduce({est.v}, 0, 2), /*phys_tol=*/0.05);
  const double en = log_negativity(reduce(v, 0, 2));
  CHECK(en_est > 0.0);
  CHECK(std::abs(en_est - en) < 0.1 * en + 0.05);
}
