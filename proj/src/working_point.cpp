#include "optomech/working_point.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include <Eigen/Dense>

namespace optomech {

namespace {

constexpr double kPi = 3.14159265358979323846;
using cd = std::complex<double>;

struct Amplitudes {
  cd psi, phi;
};

// Inner linear solve for (Psi_s, Phi_s) at fixed mirror displacement q.
Amplitudes solve_amplitudes(const DriveParams& p, const PolaritonBasis& basis, double q) {
  const double G = p.G0 * std::sin(2.0 * basis.phi);
  const double delta_q = p.Delta_L - 0.5 * q * p.G0;
  const double omega_t = basis.Omega - 0.5 * q * p.G0 * std::cos(2.0 * basis.phi);
  Eigen::Matrix2cd m;
  m << cd(p.gamma, delta_q - omega_t), cd(0.0, 0.5 * G * q),
       cd(0.0, 0.5 * G * q), cd(p.gamma, delta_q + omega_t);
  Eigen::Vector2cd rhs;
  rhs << cd(-p.E_L * std::sin(basis.phi), 0.0), cd(p.E_L * std::cos(basis.phi), 0.0);
  const Eigen::Vector2cd x = m.colPivHouseholderQr().solve(rhs);
  return {x(0), x(1)};
}

double cavity_intensity(const DriveParams& p, const PolaritonBasis& basis, double q) {
  const Amplitudes a = solve_amplitudes(p, basis, q);
  const cd a_s = a.phi * std::cos(basis.phi) - a.psi * std::sin(basis.phi);
  return std::norm(a_s);
}

// Fixed-point map q -> (G0/omega_m)|a_s(q)|^2.
double q_map(const DriveParams& p, const PolaritonBasis& basis, double q) {
  return p.G0 / p.omega_m * cavity_intensity(p, basis, q);
}

// Residual of the three steady-state equations in units of gamma*|E_L|
// (plain gamma for the undriven case).
double equations_residual(const DriveParams& p, const PolaritonBasis& basis, double q,
                          const Amplitudes& a) {
  const double G = p.G0 * std::sin(2.0 * basis.phi);
  const double delta_q = p.Delta_L - 0.5 * q * p.G0;
  const double omega_t = basis.Omega - 0.5 * q * p.G0 * std::cos(2.0 * basis.phi);
  const cd r1 = cd(p.gamma, delta_q - omega_t) * a.psi + cd(0.0, 0.5 * G * q) * a.phi +
                cd(p.E_L * std::sin(basis.phi), 0.0);
  const cd r2 = cd(p.gamma, delta_q + omega_t) * a.phi + cd(0.0, 0.5 * G * q) * a.psi -
                cd(p.E_L * std::cos(basis.phi), 0.0);
  const cd a_s = a.phi * std::cos(basis.phi) - a.psi * std::sin(basis.phi);
  const double r3 = p.omega_m * (q - p.G0 / p.omega_m * std::norm(a_s));
  const double norm = std::sqrt(std::norm(r1) + std::norm(r2) + r3 * r3);
  return p.E_L > 0 ? norm / (p.gamma * p.E_L) : norm / p.gamma;
}

// Bracketing scan for all fixed points of g(q) = q - q_map(q) on the physical
// interval. Amplitudes are bounded by |E_L|/gamma, so |q_s| never exceeds
// 2 G0 E_L^2 / (omega_m gamma^2).
std::vector<double> scan_fixed_points(const DriveParams& p, const PolaritonBasis& basis) {
  const double bound = 2.0 * std::abs(p.G0) / p.omega_m * (p.E_L * p.E_L) / (p.gamma * p.gamma);
  std::vector<double> roots;
  if (bound < 1e-300) {
    roots.push_back(0.0);
    return roots;
  }
  const double lo = p.G0 >= 0 ? 0.0 : -1.05 * bound;
  const double hi = p.G0 >= 0 ? 1.05 * bound : 0.0;
  const int n_scan = 600;
  auto g = [&](double q) { return q - q_map(p, basis, q); };
  double prev_q = lo, prev_g = g(lo);
  for (int i = 1; i <= n_scan; ++i) {
    const double q = lo + (hi - lo) * i / n_scan;
    const double gq = g(q);
    if (prev_g == 0.0) roots.push_back(prev_q);
    if (prev_g * gq < 0.0) {
      double a = prev_q, b = q, ga = prev_g;
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (a + b);
        const double gm = g(mid);
        if (ga * gm <= 0.0) b = mid; else { a = mid; ga = gm; }
      }
      roots.push_back(0.5 * (a + b));
    }
    prev_q = q;
    prev_g = gq;
  }
  if (std::abs(g(hi)) == 0.0) roots.push_back(hi);
  // cluster near-identical roots
  std::sort(roots.begin(), roots.end());
  std::vector<double> unique;
  const double tol = 1e-7 * std::max(1.0, bound);
  for (double r : roots)
    if (unique.empty() || std::abs(r - unique.back()) > tol) unique.push_back(r);
  return unique;
}

} // namespace

void DriveParams::validate() const {
  if (!(gamma > 0)) throw std::invalid_argument("DriveParams: gamma must be > 0");
  if (!(gamma_m > 0)) throw std::invalid_argument("DriveParams: gamma_m must be > 0");
  if (!(f1 >= 0)) throw std::invalid_argument("DriveParams: f1 must be >= 0");
  if (!(omega_m > 0)) throw std::invalid_argument("DriveParams: omega_m must be > 0");
  if (!(E_L >= 0)) throw std::invalid_argument("DriveParams: E_L is real >= 0 (drive phase absorbed)");
}

PolaritonBasis polariton_angle(double delta, double f1) {
  if (!(f1 >= 0)) throw std::invalid_argument("polariton_angle: f1 must be >= 0");
  const double omega = std::hypot(f1, delta);
  if (omega == 0.0) return {kPi / 4.0, 0.0};
  const double cos2 = std::clamp(0.5 + delta / (2.0 * omega), 0.0, 1.0);
  return {std::acos(std::sqrt(cos2)), omega};
}

WorkingPoint solve_steady_state(const DriveParams& p, const SteadyStateOptions& opt) {
  p.validate();
  const PolaritonBasis basis = polariton_angle(p.delta, p.f1);

  double q = 0.0;
  double step = 0.0;
  bool converged = false;
  for (int it = 0; it < opt.max_iter; ++it) {
    const double q_next = q_map(p, basis, q);
    step = q_next - q;
    q += opt.damping * step;
    if (std::abs(step) < opt.tol * std::max(1.0, std::abs(q))) {
      converged = true;
      break;
    }
  }
  Amplitudes amps = solve_amplitudes(p, basis, q);
  const double residual = equations_residual(p, basis, q, amps);

  // Scan before reporting convergence trouble: a bistable point typically
  // makes the damped iteration hop between branches.
  const std::vector<double> branches = scan_fixed_points(p, basis);
  if (branches.size() > 1) {
    std::string msg = "solve_steady_state: multistable working point; fixed points at q_s =";
    for (double b : branches) msg += " " + std::to_string(b);
    throw MultistabilityError(msg, branches);
  }
  if (!converged || residual > 1e-10)
    throw SteadyStateError("solve_steady_state: fixed-point iteration did not converge"
                           " (residual " + std::to_string(residual) + ")", residual);

  // Remove the common amplitude phase so the effective couplings come out real:
  // G_psi and G_phi are both proportional to a_s = Phi_s cos(phi) - Psi_s sin(phi).
  cd a_s = amps.phi * std::cos(basis.phi) - amps.psi * std::sin(basis.phi);
  if (std::abs(a_s) > 0.0) {
    const cd rot = std::conj(a_s) / std::abs(a_s);
    amps.psi *= rot;
    amps.phi *= rot;
    a_s *= rot;
  }

  WorkingPoint wp;
  wp.phi = basis.phi;
  wp.Omega = basis.Omega;
  wp.q_s = q;
  wp.psi_s = amps.psi;
  wp.phi_s = amps.phi;
  wp.Delta_q = p.Delta_L - 0.5 * q * p.G0;
  wp.Omega_tilde = basis.Omega - 0.5 * q * p.G0 * std::cos(2.0 * basis.phi);
  wp.residual = residual;

  const double g_s = p.G0 * std::sin(basis.phi) * std::sin(basis.phi);
  const double g_c = p.G0 * std::cos(basis.phi) * std::cos(basis.phi);
  const double g_mix = p.G0 * std::sin(2.0 * basis.phi);
  const cd g_psi_c = std::sqrt(2.0) * (0.5 * g_mix * amps.phi - g_s * amps.psi);
  const cd g_phi_c = std::sqrt(2.0) * (g_c * amps.phi - 0.5 * g_mix * amps.psi);
  wp.G_psi = g_psi_c.real();
  wp.G_phi = g_phi_c.real();
  wp.G_q = 0.5 * g_mix * q;

  if (std::abs(amps.psi) > 1e-14 && std::abs(amps.phi) > 1e-14) {
    wp.relative_phase = std::arg(amps.psi / amps.phi);
    wp.phases_aligned = std::abs(std::sin(wp.relative_phase)) < 1e-9;
  } else {
    wp.relative_phase = 0.0;
    wp.phases_aligned = true;
  }
  return wp;
}

WorkingPoint second_rotation(WorkingPoint wp) {
  wp.U = std::hypot(wp.Omega_tilde, wp.G_q);
  if (wp.U == 0.0) {
    wp.varphi = 0.0;
  } else {
    const double cos2 = std::clamp(0.5 + wp.Omega_tilde / (2.0 * wp.U), 0.0, 1.0);
    wp.varphi = std::acos(std::sqrt(cos2));
  }
  wp.G_theta = wp.G_psi * std::cos(wp.varphi) + wp.G_phi * std::sin(wp.varphi);
  wp.G_pi = wp.G_psi * std::sin(wp.varphi) - wp.G_phi * std::cos(wp.varphi);
  const double scale = std::max({std::abs(wp.G_theta), std::abs(wp.G_pi), 1e-30});
  wp.has_G_t = std::abs(wp.G_theta + wp.G_pi) < 1e-9 * scale;
  wp.G_t = wp.has_G_t ? wp.G_theta : 0.0;
  return wp;
}

} // namespace optomech
