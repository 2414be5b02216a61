#include "optomech/oracles.hpp"

#include <cmath>
#include <stdexcept>

namespace optomech::oracles {

namespace {
using cd = std::complex<double>;
constexpr cd kI{0.0, 1.0};

void require_bath(double n_bar, cd m) {
  if (!(n_bar >= 0)) throw std::domain_error("oracle: n_bar must be >= 0");
  if (std::abs(m) > std::sqrt(n_bar * (n_bar + 1.0)) * (1.0 + 1e-12) + 1e-15)
    throw std::domain_error("oracle: |m| exceeds sqrt(n_bar (n_bar+1))");
}

double chi_of(double gamma1, double eta_aa, double eta_bb, double eta_ab) {
  const double g2a = 2.0 + eta_aa * eta_aa;
  const double g2b = 2.0 + eta_bb * eta_bb;
  const double g2ab = 1.0 + gamma1 * gamma1 + eta_ab * eta_ab;
  return g2a * g2b / (g2ab * g2ab);
}
} // namespace

TwoMode two_mode_squeezed(double gamma, double n_bar, cd m, double G_psi) {
  if (!(gamma > 0)) throw std::domain_error("oracle: gamma must be > 0");
  require_bath(n_bar, m);
  if (!(std::abs(G_psi) < 2.0 * gamma))
    throw std::domain_error("two_mode oracle: requires |G_psi| < 2 gamma (stability)");
  const double den = gamma * gamma - 0.25 * G_psi * G_psi;
  const double np1 = n_bar + 1.0;

  TwoMode o;
  o.moments.n_b = 0.125 * np1 * G_psi * G_psi / den;                       // <dPsi† dPsi>
  o.moments.n_a = 0.5 * ((n_bar - 1.0) + np1 * gamma * gamma / den);      // <db† db>
  o.moments.ab = -0.25 * kI * np1 * gamma * G_psi / den;                   // <dPsi db>
  o.moments.adag_b = std::conj(kI * gamma * m * G_psi / (4.0 * den));      // <db† dPsi>
  o.moments.aa = 0.5 * m * (1.0 + gamma * gamma / den);                    // <db²>
  o.moments.bb = -0.125 * m * G_psi * G_psi / den;                         // <dPsi²>

  o.var_sum_x = gamma * np1 / (2.0 * (gamma - 0.5 * G_psi));
  o.var_diff_x = gamma * np1 / (2.0 * (gamma + 0.5 * G_psi));
  o.var_psi_x = 0.5 * (np1 * gamma * gamma / den - n_bar);
  o.var_q = 0.5 * (np1 * gamma * gamma / den + n_bar);

  const double cs_den = 2.0 * n_bar * gamma * gamma - 0.25 * (n_bar - 1.0) * G_psi * G_psi;
  o.eta_ab_sq = np1 * gamma * gamma / cs_den;
  o.gamma1 = gamma * std::abs(m) / std::sqrt(np1 * cs_den);
  o.eta_psi_deg = std::abs(m) / np1;
  o.eta_bb_deg = std::abs(m) * (2.0 * gamma * gamma - 0.25 * G_psi * G_psi) / cs_den;
  o.chi = chi_of(o.gamma1, o.eta_bb_deg, o.eta_psi_deg, std::sqrt(o.eta_ab_sq));
  return o;
}

TwoMode two_mode_thermal(double gamma, double n_bar, double G_psi) {
  return two_mode_squeezed(gamma, n_bar, cd{0.0, 0.0}, G_psi);
}

TwoColour two_colour(double gamma, double n_bar, double G_theta, double U) {
  if (!(gamma > 0)) throw std::domain_error("oracle: gamma must be > 0");
  require_bath(n_bar, cd{0, 0});
  const double den = U * U - G_theta * G_theta + 4.0 * gamma * gamma;
  if (!(den > 0))
    throw std::domain_error("two_colour oracle: requires G_theta² < U² + 4γ² (stability)");
  const double np1 = n_bar + 1.0;

  TwoColour o;
  o.moments.n_a = n_bar + np1 * G_theta * G_theta / (2.0 * den);           // <db† db>
  o.moments.n_b = np1 * G_theta * G_theta / (2.0 * den);                   // <dTheta† dTheta>
  o.moments.ab = -0.5 * kI * np1 * (2.0 * gamma - kI * U) * G_theta / den; // <db dTheta>
  const double c = 4.0 * gamma * gamma + U * U;
  o.eta_ab_sq = np1 * c / (2.0 * n_bar * c - (n_bar - 1.0) * G_theta * G_theta);
  return o;
}

ThetaPi three_mode_theta_pi(double gamma, double n_bar, cd m, double G_t, double U) {
  if (!(gamma > 0)) throw std::domain_error("oracle: gamma must be > 0");
  require_bath(n_bar, m);
  const double b_sq = U * U - 0.5 * G_t * G_t;
  if (!(b_sq > 0)) throw std::domain_error("theta_pi oracle: requires U > G_t/sqrt(2)");
  const double g2 = gamma * gamma;
  const double big_d = 8.0 * (b_sq + g2) * (b_sq + 4.0 * g2);
  const double s1 = 3.0 * G_t * G_t + 8.0 * (b_sq + g2);
  const cd s2 = cd(3.0 * G_t * G_t + 4.0 * (b_sq - 2.0 * g2), 12.0 * gamma * U);
  const double np1 = n_bar + 1.0;

  ThetaPi o;
  o.B = std::sqrt(b_sq);
  o.n_m = n_bar + np1 * s1 * G_t * G_t / big_d;
  o.n_theta = o.n_pi = np1 * s1 * G_t * G_t / (2.0 * big_d);
  o.theta_b = kI * np1 * cd(gamma, U) * s2 * G_t / big_d;
  o.pi_b = std::conj(o.theta_b);
  o.thetadag_pi = np1 * std::conj(s2) * G_t * G_t / (2.0 * big_d);
  o.theta_pi = m * G_t * G_t * s1 / (2.0 * big_d);
  o.theta_sq = m * G_t * G_t * s2 / (2.0 * big_d);

  o.gamma1 = std::abs(s2) / s1;
  o.eta_theta_pi = std::abs(m) / np1;
  o.eta_auto = o.eta_theta_pi * std::abs(s2) / s1;
  o.upsilon_sq = 1.0 - 24.0 * (G_t * G_t + 2.0 * b_sq) * (b_sq + g2) / (s1 * s1);
  const double msq_ratio = std::norm(m) / (np1 * np1);
  const double bracket = 1.0 + (1.0 - o.upsilon_sq) * (1.0 - msq_ratio) /
                                   (1.0 + o.upsilon_sq + msq_ratio);
  o.chi = bracket * bracket;
  return o;
}

A1A2 three_mode_a1_a2(double gamma, double n_bar, double G_t, double U) {
  if (!(gamma > 0)) throw std::domain_error("oracle: gamma must be > 0");
  require_bath(n_bar, cd{0, 0});
  const double b_sq = U * U - 0.5 * G_t * G_t;
  if (!(b_sq > 0)) throw std::domain_error("a1_a2 oracle: requires U > G_t/sqrt(2)");
  const double g2 = gamma * gamma;
  const double big_d = 8.0 * (b_sq + g2) * (b_sq + 4.0 * g2);
  const double s1 = 3.0 * G_t * G_t + 8.0 * (b_sq + g2);
  const double np1 = n_bar + 1.0;

  A1A2 o;
  o.B = std::sqrt(b_sq);
  o.n_m = n_bar + np1 * s1 * G_t * G_t / big_d;
  // sqrt(2) prefactor and 2(B²+4γ²) from the Θ/Π moment set via the exact
  // A₁/A₂ rotation; both confirmed against the solved covariance.
  o.a1_b = -std::sqrt(2.0) * kI * gamma * np1 * s1 * G_t / big_d;
  o.a2_b = -std::sqrt(2.0) * np1 * (3.0 * G_t * G_t + 4.0 * (b_sq + g2)) * U * G_t / big_d;
  o.n_a1 = 2.0 * np1 * (b_sq + 4.0 * g2) * G_t * G_t / big_d;
  o.a1dag_a2 = -6.0 * kI * np1 * gamma * U * G_t * G_t / big_d;
  o.n_a2 = 6.0 * np1 * U * U * G_t * G_t / big_d;
  o.eta_a2b_sq = std::norm(o.a2_b) / (o.n_a2 * o.n_m);
  return o;
}

} // namespace optomech::oracles
