#pragma once

#include <complex>

#include "optomech/moments.hpp"

namespace optomech::oracles {

// Closed-form steady-state moments, written out term by term with no
// simplification so they stay an independent route against the Lyapunov
// pipeline. Any algebraic
// cleanup belongs in tests, not here. Mode pair convention matches
// quad_to_complex_moments: A = mechanical mode, B = the named polariton,
// except where stated.

struct TwoMode {
  MomentSet moments;     // pair (b, Ψ)
  double var_sum_x = 0;  // Δ(δΥ_x)², Υ = (Ψ_x + q)/√2 at the optimal quadrature phase
  double var_diff_x = 0; // Δ(δΛ_x)²
  double var_psi_x = 0;  // Δ(δΨ_x)²
  double var_q = 0;      // Δ(δq)²
  double eta_ab_sq = 0;  // (n̄+1)γ² / [2n̄γ² − (n̄−1)G_Ψ²/4]
  // squeezed-bath degrees (thermal: gamma1 = eta_aa = eta_bb = 0)
  double gamma1 = 0;
  double eta_bb_deg = 0; // |η_(b,b)|
  double eta_psi_deg = 0;// |η_(Ψ,Ψ)| = |m|/(n̄+1)
  double chi = 0;
};

/// Thermal mirror bath; requires |G_psi| < 2γ.
TwoMode two_mode_thermal(double gamma, double n_bar, double G_psi);

/// Squeezed mirror bath; m = 0 reduces exactly to two_mode_thermal.
TwoMode two_mode_squeezed(double gamma, double n_bar, std::complex<double> m, double G_psi);

struct TwoColour {
  MomentSet moments;     // pair (b, Θ)
  double eta_ab_sq = 0;  // (n̄+1)(4γ²+U²) / [2n̄(4γ²+U²) − (n̄−1)G_θ²]
};

/// Single polariton at detuning U; requires G_theta² < U² + 4γ².
TwoColour two_colour(double gamma, double n_bar, double G_theta, double U);

struct ThetaPi {
  double n_m = 0;                        // <δb†δb>
  double n_theta = 0, n_pi = 0;
  std::complex<double> theta_b{0, 0};    // <δΘδb>
  std::complex<double> pi_b{0, 0};       // <δΠδb> = <δΘδb>*
  std::complex<double> thetadag_pi{0, 0};
  std::complex<double> theta_pi{0, 0};   // <δΘδΠ>, zero for a thermal bath
  std::complex<double> theta_sq{0, 0};   // <δΘ²>, zero for a thermal bath
  double B = 0;                          // √(U² − G_t²/2)
  double gamma1 = 0;                     // |γ_(θ,π)|, independent of n̄
  double eta_theta_pi = 0;               // |m|/(n̄+1)
  double eta_auto = 0;                   // |η_(θ,θ)| = |η_(π,π)|
  double upsilon_sq = 0;                 // |Υ|² (equals gamma1²)
  double chi = 0;                        // ≥ 1 always
};

/// Both transformed polaritons parametrically coupled to the mirror with
/// G_θ = −G_π = G_t; requires U > G_t/√2.
ThetaPi three_mode_theta_pi(double gamma, double n_bar, std::complex<double> m,
                            double G_t, double U);

struct A1A2 {
  double n_m = 0;
  double n_a1 = 0, n_a2 = 0;
  std::complex<double> a1_b{0, 0};   // <δA₁δb>
  std::complex<double> a2_b{0, 0};   // <δA₂δb>
  std::complex<double> a1dag_a2{0, 0};
  double B = 0;
  double eta_a2b_sq = 0;             // |η_(A₂,b)|²; > 1 is the entanglement predicate
};

/// Mixed parametric (b–A₁) and linear-mixing (A₁–A₂) chain; requires U > G_t/√2.
A1A2 three_mode_a1_a2(double gamma, double n_bar, double G_t, double U);

} // namespace optomech::oracles
