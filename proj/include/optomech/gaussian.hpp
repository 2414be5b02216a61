#pragma once

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "optomech/moments.hpp"

namespace optomech {

// Quadrature conventions used everywhere:
//   x = (b + b†)/√2,  y = (b − b†)/(i√2),  ordering (x₁, y₁, x₂, y₂, …),
//   vacuum variance 1/2, mode 0 is always the mechanical mode.

struct BathSpec {
  double n_bar = 0.0;                     // thermal occupation
  std::complex<double> m_sq{0.0, 0.0};    // two-photon correlation, |m| ≤ √(n̄(n̄+1))

  void validate() const;                  // throws std::invalid_argument
};

struct LinearGaussianModel {
  Eigen::MatrixXd drift;                  // A, 2M×2M
  Eigen::MatrixXd diffusion;              // D, 2M×2M symmetric PSD
  std::vector<std::string> mode_labels;   // size M
  double gamma = 1.0;                     // rate unit; sets the stability margin
  BathSpec bath;

  int modes() const { return static_cast<int>(mode_labels.size()); }
};

struct CovarianceMatrix {
  Eigen::MatrixXd v;                      // V_ij = <u_i u_j + u_j u_i>/2

  int modes() const { return static_cast<int>(v.rows()) / 2; }
};

enum class ThreeModeVariant { theta_pi, a1_a2 };

// Reduced secular models. gamma_m = 2*gamma throughout (all modes damped at gamma).
LinearGaussianModel build_two_mode(double G_psi, double gamma, const BathSpec& bath);
LinearGaussianModel build_two_colour(double G_theta, double U, double gamma, const BathSpec& bath);
LinearGaussianModel build_three_mode(double G_t, double U, double gamma, const BathSpec& bath,
                                     ThreeModeVariant variant);

/// Orthogonal quadrature change of basis (b, Θ, Π) → (b, A₁, A₂) with
/// A₁ = (Θ−Π)/√2, A₂ = (Θ+Π)/√2.
Eigen::MatrixXd theta_pi_to_a1_a2_rotation();

struct StabilityReport {
  bool stable = false;
  bool marginal = false;                  // |max Re λ| within the margin
  double max_real = 0;
  std::vector<std::complex<double>> eigenvalues;
};

/// Stable iff max Re eig(A) < −1e-9·gamma.
StabilityReport stability(const LinearGaussianModel& model);

/// Steady-state covariance from A V + V Aᵀ = −D (Kronecker vectorization).
/// Requires a stable model; residual is checked to 1e-12·‖D‖_max.
CovarianceMatrix solve_lyapunov(const LinearGaussianModel& model);

/// 4×4 principal submatrix over the quadratures of two modes (in the given order).
CovarianceMatrix reduce(const CovarianceMatrix& v, int mode_a, int mode_b);

/// Symplectic spectrum: moduli of eig(iΩV), one per mode, sorted ascending.
std::vector<double> symplectic_eigenvalues(const CovarianceMatrix& v);

struct PhysicalityReport {
  double min_uncertainty_eig = 0;         // min eig of V + (i/2)Ω
  double min_symplectic = 0;
  bool ok = false;
};

/// V + (i/2)Ω ⪰ −tol and all symplectic eigenvalues ≥ 1/2 − tol.
PhysicalityReport check_physicality(const CovarianceMatrix& v, double tol = 1e-10);

/// Logarithmic negativity of a two-mode covariance, max{0, −log₂(2ν̃_min)}.
/// Rejects input violating the uncertainty relation beyond phys_tol (loosen
/// for sampled covariance estimates).
double log_negativity(const CovarianceMatrix& v4, double phys_tol = 1e-10);

/// Complex-mode second moments of a mode pair from the quadrature covariance.
MomentSet quad_to_complex_moments(const CovarianceMatrix& v, int mode_a, int mode_b);

/// Inverse of quad_to_complex_moments: 4×4 covariance of the pair.
CovarianceMatrix moments_to_quad(const MomentSet& ms);

/// Variance of the quadrature combination cᵀu.
double quadrature_variance(const CovarianceMatrix& v, const Eigen::VectorXd& coeffs);

} // namespace optomech
