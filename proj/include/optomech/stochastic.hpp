#pragma once

#include <cstdint>

#include <Eigen/Dense>

#include "optomech/gaussian.hpp"

namespace optomech {

// Times in units of 1/gamma.
struct SimConfig {
  double dt = 0.01;
  double burn_in = 10.0;
  double sample_window = 100.0;
  int n_trajectories = 200;
  std::uint64_t seed = 1;

  // dt·spectralRadius(A) < 0.1 and n_trajectories >= 100
  void validate(const LinearGaussianModel& model) const;
};

struct SimEstimate {
  Eigen::MatrixXd v;        // symmetrized second-moment estimate
  Eigen::MatrixXd std_err;  // per-entry standard error (across trajectories)
  long steps_per_trajectory = 0;
};

struct StepOperator {
  Eigen::MatrixXd propagator;  // e^{A dt}
  Eigen::MatrixXd noise_cov;   // ∫₀^dt e^{As} D e^{Aᵀs} ds
};

/// Exact one-step discretization of the linear SDE. Satisfies the semigroup
/// identities F(2dt) = F(dt)², Q(2dt) = F Q Fᵀ + Q and leaves the Lyapunov
/// covariance stationary: F V Fᵀ + Q = V.
StepOperator one_step(const LinearGaussianModel& model, double dt);

/// Ensemble/time-averaged steady-state covariance of the linear Langevin
/// system. One-step propagation is exact: u ← e^{A dt} u + w with
/// w ~ N(0, ∫₀^dt e^{As} D e^{Aᵀs} ds), so dt controls sampling density only.
/// One splitmix64-derived RNG stream per trajectory; deterministic given seed.
SimEstimate simulate(const LinearGaussianModel& model, const SimConfig& cfg);

} // namespace optomech
