#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

namespace optomech {

// All rates in units of gamma (gamma itself carried explicitly so callers may
// rescale). Working regime: gamma_a = kappa = gamma, gamma_m = 2*gamma.
struct DriveParams {
  double gamma = 1.0;
  double gamma_m = 2.0;
  double delta = 0.0;     // (omega_c - omega_1)/2
  double f1 = 0.0;        // exciton-cavity coupling
  double Delta_L = 0.0;   // omega_0 - omega_L
  double E_L = 0.0;       // drive amplitude, real >= 0 (phase absorbed)
  double G0 = 0.0;        // bare optomechanical coupling
  double omega_m = 1.0;   // mechanical frequency

  void validate() const;  // throws std::invalid_argument
};

struct PolaritonBasis {
  double phi;    // rotation angle in [0, pi/2]
  double Omega;  // sqrt(f1^2 + delta^2)
};

/// cos²φ = 1/2 + δ/(2Ω). Degenerate f1 = δ = 0 returns φ = π/4 by convention.
PolaritonBasis polariton_angle(double delta, double f1);

struct WorkingPoint {
  double phi = 0, Omega = 0;
  double q_s = 0;
  std::complex<double> psi_s{0, 0}, phi_s{0, 0};
  double Delta_q = 0, Omega_tilde = 0;
  double G_psi = 0, G_phi = 0, G_q = 0;
  double residual = 0;         // steady-state equation residual / (gamma·|E_L|)
  double relative_phase = 0;   // arg(psi_s/phi_s) after the common phase is removed
  bool phases_aligned = true;  // relative phase ≈ 0 or π
  // filled by second_rotation
  double varphi = 0, U = 0;
  double G_theta = 0, G_pi = 0;
  double G_t = 0;              // valid only when phi + varphi = π/4 (G_theta = −G_pi)
  bool has_G_t = false;
};

struct SteadyStateOptions {
  double tol = 1e-12;      // |q_{k+1} − q_k| convergence threshold
  double damping = 0.5;    // fixed-point damping factor in (0, 1]
  int max_iter = 1000;
};

struct SteadyStateError : std::runtime_error {
  double residual;
  SteadyStateError(const std::string& what, double r) : std::runtime_error(what), residual(r) {}
};

struct MultistabilityError : std::runtime_error {
  std::vector<double> branches;  // all fixed points q_s found
  MultistabilityError(const std::string& what, std::vector<double> b)
      : std::runtime_error(what), branches(std::move(b)) {}
};

/// Classical steady state and the effective couplings of the linearized model.
/// Damped fixed-point iteration on q_s with an inner 2×2 linear solve for the
/// polariton amplitudes, seeded from q_s = 0. Additional fixed points found by
/// a bracketing scan raise MultistabilityError (never silently selected).
WorkingPoint solve_steady_state(const DriveParams& p, const SteadyStateOptions& opt = {});

/// Second rotation to the (Θ, Π) basis: cos²φ₂ = 1/2 + Ω̃/(2U), U = √(Ω̃²+G_q²).
WorkingPoint second_rotation(WorkingPoint wp);

} // namespace optomech
