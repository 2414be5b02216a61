#include "optomech/validation.hpp"

#include <cmath>
#include <complex>
#include <sstream>
#include <vector>

#include "optomech/coherence.hpp"
#include "optomech/gaussian.hpp"
#include "optomech/oracles.hpp"
#include "optomech/stochastic.hpp"

namespace optomech::validation {

namespace {

using cd = std::complex<double>;

constexpr double kRelTol = 1e-9;

struct Collector {
  std::ostringstream bad;
  int n_checked = 0;
  int n_failed = 0;
  double worst = 0;

  void compare(const std::string& what, cd got, cd want, double tol = kRelTol) {
    ++n_checked;
    const double scale = std::max({std::abs(got), std::abs(want), 1.0});
    const double rel = std::abs(got - want) / scale;
    worst = std::max(worst, rel);
    if (rel > tol) {
      ++n_failed;
      if (n_failed <= 4)
        bad << "  " << what << ": got " << got << " want " << want << " rel " << rel << "\n";
    }
  }

  CheckResult result(const std::string& name) const {
    CheckResult r;
    r.name = name;
    r.pass = n_failed == 0;
    std::ostringstream d;
    d << n_checked << " comparisons, worst rel err " << worst;
    if (n_failed > 0) d << ", " << n_failed << " FAILED\n" << bad.str();
    r.detail = d.str();
    return r;
  }
};

std::string at(double n_bar, double g, double u = -1) {
  std::ostringstream s;
  s << "[nbar=" << n_bar << " g=" << g;
  if (u >= 0) s << " U=" << u;
  s << "]";
  return s.str();
}

bool physical(const CovarianceMatrix& v) { return check_physicality(v).ok; }

CheckResult two_mode_thermal_grid_impl() {
  Collector c;
  int unphysical = 0;
  for (double n_bar : {0.0, 0.3, 0.7, 0.9, 1.2}) {
    for (double g : {0.2, 0.6, 1.0, 1.4, 1.8}) {
      const auto model = build_two_mode(g, 1.0, {n_bar, 0.0});
      if (!stability(model).stable) continue;
      const CovarianceMatrix v = solve_lyapunov(model);
      if (!physical(v)) ++unphysical;
      const MomentSet ms = quad_to_complex_moments(v, 0, 1);
      const auto o = oracles::two_mode_thermal(1.0, n_bar, g);
      const std::string tag = at(n_bar, g);
      c.compare("n_b " + tag, ms.n_a, o.moments.n_a);
      c.compare("n_psi " + tag, ms.n_b, o.moments.n_b);
      c.compare("<psi b> " + tag, ms.ab, o.moments.ab);
      c.compare("<b† psi> " + tag, ms.adag_b, o.moments.adag_b);
      c.compare("<b²> " + tag, ms.aa, o.moments.aa);
      c.compare("<psi²> " + tag, ms.bb, o.moments.bb);
      // x-quadrature variances; the correlated pair is (q, -psi_y) at this
      // quadrature phase, so the sum/difference map onto (q ∓ psi_y)/√2.
      Eigen::VectorXd sum(4), diff(4);
      sum << 1, 0, 0, -1;
      diff << 1, 0, 0, 1;
      c.compare("var(sum) " + tag, quadrature_variance(v, sum / std::sqrt(2.0)), o.var_sum_x);
      c.compare("var(diff) " + tag, quadrature_variance(v, diff / std::sqrt(2.0)), o.var_diff_x);
      c.compare("var(psi_x) " + tag, v.v(2, 2), o.var_psi_x);
      c.compare("var(q) " + tag, v.v(0, 0), o.var_q);
      if (n_bar > 0 || g > 0) {
        const CoherenceReport deg = degrees(ms);
        c.compare("eta_ab² " + tag, deg.eta_ab * deg.eta_ab, o.eta_ab_sq);
      }
    }
  }
  CheckResult r = c.result("oracle_two_mode_thermal");
  if (unphysical > 0) {
    r.pass = false;
    r.detail += " + " + std::to_string(unphysical) + " unphysical covariances";
  }
  return r;
}

CheckResult two_mode_squeezed_grid_impl() {
  Collector c;
  for (double n_bar : {0.1, 0.5, 0.9, 1.3}) {
    const double m = std::sqrt(n_bar * (n_bar + 1.0));
    for (double g : {0.3, 0.9, 1.0, 1.5, 1.9}) {
      const auto model = build_two_mode(g, 1.0, {n_bar, m});
      const CovarianceMatrix v = solve_lyapunov(model);
      const MomentSet ms = quad_to_complex_moments(v, 0, 1);
      const auto o = oracles::two_mode_squeezed(1.0, n_bar, m, g);
      const std::string tag = at(n_bar, g);
      c.compare("<b† psi> " + tag, ms.adag_b, o.moments.adag_b);
      c.compare("<b²> " + tag, ms.aa, o.moments.aa);
      c.compare("<psi²> " + tag, ms.bb, o.moments.bb);
      c.compare("<psi b> " + tag, ms.ab, o.moments.ab);
      const CoherenceReport deg = degrees(ms);
      c.compare("gamma1 " + tag, deg.gamma1, o.gamma1);
      c.compare("eta_psi " + tag, deg.eta_bb, o.eta_psi_deg);
      c.compare("eta_b " + tag, deg.eta_aa, o.eta_bb_deg);
      c.compare("chi " + tag, deg.chi, o.chi);
    }
  }
  return c.result("oracle_two_mode_squeezed");
}

CheckResult two_colour_grid_impl() {
  Collector c;
  for (double n_bar : {0.0, 0.4, 0.8, 1.2}) {
    for (double g : {0.5, 1.0, 2.0}) {
      for (double u : {0.0, 1.0, 3.0, 8.0}) {
        if (!(u * u - g * g + 4.0 > 0)) continue;
        const auto model = build_two_colour(g, u, 1.0, {n_bar, 0.0});
        if (!stability(model).stable) continue;
        const CovarianceMatrix v = solve_lyapunov(model);
        const MomentSet ms = quad_to_complex_moments(v, 0, 1);
        const auto o = oracles::two_colour(1.0, n_bar, g, u);
        const std::string tag = at(n_bar, g, u);
        c.compare("n_b " + tag, ms.n_a, o.moments.n_a);
        c.compare("n_theta " + tag, ms.n_b, o.moments.n_b);
        c.compare("<b theta> " + tag, ms.ab, o.moments.ab);
        c.compare("<b† theta> " + tag, ms.adag_b, 0.0);
        const CoherenceReport deg = degrees(ms);
        c.compare("eta² " + tag, deg.eta_ab * deg.eta_ab, o.eta_ab_sq);
      }
    }
  }
  return c.result("oracle_two_colour");
}

CheckResult theta_pi_grid_impl() {
  Collector c;
  for (double n_bar : {0.0, 0.3, 1.0, 1.8}) {
    for (double gt : {0.5, 1.0, 2.5}) {
      for (double u : {1.0, 3.0, 9.0}) {
        if (!(u > gt / std::sqrt(2.0))) continue;
        for (bool squeezed : {false, true}) {
          const double m = squeezed ? std::sqrt(n_bar * (n_bar + 1.0)) : 0.0;
          const auto model =
              build_three_mode(gt, u, 1.0, {n_bar, m}, ThreeModeVariant::theta_pi);
          const CovarianceMatrix v = solve_lyapunov(model);
          const auto o = oracles::three_mode_theta_pi(1.0, n_bar, m, gt, u);
          const MomentSet bt = quad_to_complex_moments(v, 0, 1);
          const MomentSet bp = quad_to_complex_moments(v, 0, 2);
          const MomentSet tp = quad_to_complex_moments(v, 1, 2);
          const std::string tag = at(n_bar, gt, u) + (squeezed ? "sq" : "th");
          c.compare("n_m " + tag, bt.n_a, o.n_m);
          c.compare("n_theta " + tag, bt.n_b, o.n_theta);
          c.compare("n_pi " + tag, bp.n_b, o.n_pi);
          c.compare("<theta b> " + tag, bt.ab, o.theta_b);
          c.compare("<pi b> " + tag, bp.ab, o.pi_b);
          c.compare("<theta† pi> " + tag, tp.adag_b, o.thetadag_pi);
          c.compare("<theta pi> " + tag, tp.ab, o.theta_pi);
          c.compare("<theta²> " + tag, tp.aa, o.theta_sq);
          c.compare("|<pi²>| " + tag, std::abs(tp.bb), std::abs(o.theta_sq));
          if (n_bar > 0 || gt > 0) {
            const CoherenceReport deg = degrees(tp);
            c.compare("gamma1 " + tag, deg.gamma1, o.gamma1);
            c.compare("chi " + tag, deg.chi, o.chi);
            if (squeezed) {
              c.compare("eta_tp " + tag, deg.eta_ab, o.eta_theta_pi);
              c.compare("eta_tt " + tag, deg.eta_aa, o.eta_auto);
            }
          }
        }
      }
    }
  }
  return c.result("oracle_theta_pi");
}

CheckResult a1_a2_grid_impl() {
  Collector c;
  for (double n_bar : {0.0, 0.2, 0.7, 1.4}) {
    for (double gt : {0.5, 1.0, 2.5}) {
      for (double u : {1.0, 3.0, 9.0}) {
        if (!(u > gt / std::sqrt(2.0))) continue;
        const auto model = build_three_mode(gt, u, 1.0, {n_bar, 0.0}, ThreeModeVariant::a1_a2);
        const CovarianceMatrix v = solve_lyapunov(model);
        const auto o = oracles::three_mode_a1_a2(1.0, n_bar, gt, u);
        const MomentSet b1 = quad_to_complex_moments(v, 0, 1);
        const MomentSet b2 = quad_to_complex_moments(v, 0, 2);
        const MomentSet a12 = quad_to_complex_moments(v, 1, 2);
        const std::string tag = at(n_bar, gt, u);
        c.compare("n_m " + tag, b1.n_a, o.n_m);
        c.compare("n_a1 " + tag, b1.n_b, o.n_a1);
        c.compare("n_a2 " + tag, b2.n_b, o.n_a2);
        c.compare("<a1 b> " + tag, b1.ab, o.a1_b);
        c.compare("<a2 b> " + tag, b2.ab, o.a2_b);
        c.compare("<a1† a2> " + tag, a12.adag_b, o.a1dag_a2);
        c.compare("<a1²> " + tag, a12.aa, 0.0);
        c.compare("<a2²> " + tag, a12.bb, 0.0);
        c.compare("<a2† b> " + tag, b2.adag_b, 0.0);
        const CoherenceReport deg = degrees(b2);
        c.compare("eta_a2b² " + tag, deg.eta_ab * deg.eta_ab, o.eta_a2b_sq);
      }
    }
  }
  return c.result("oracle_a1_a2");
}

CheckResult basis_consistency_grid_impl() {
  Collector c;
  const Eigen::MatrixXd r = theta_pi_to_a1_a2_rotation();
  for (double n_bar : {0.0, 0.3, 1.1}) {
    for (double gt : {0.7, 1.8}) {
      for (double u : {1.5, 6.0}) {
        const auto mt = build_three_mode(gt, u, 1.0, {n_bar, 0.0}, ThreeModeVariant::theta_pi);
        const auto ma = build_three_mode(gt, u, 1.0, {n_bar, 0.0}, ThreeModeVariant::a1_a2);
        const Eigen::MatrixXd vt = r * solve_lyapunov(mt).v * r.transpose();
        const Eigen::MatrixXd va = solve_lyapunov(ma).v;
        c.compare("max|ΔV| " + at(n_bar, gt, u), (vt - va).cwiseAbs().maxCoeff(), 0.0, 1e-12);
      }
    }
  }
  return c.result("basis_consistency");
}

} // namespace

CheckResult two_mode_thermal_grid() { return two_mode_thermal_grid_impl(); }
CheckResult two_mode_squeezed_grid() { return two_mode_squeezed_grid_impl(); }
CheckResult two_colour_grid() { return two_colour_grid_impl(); }
CheckResult theta_pi_grid() { return theta_pi_grid_impl(); }
CheckResult a1_a2_grid() { return a1_a2_grid_impl(); }
CheckResult basis_consistency_grid() { return basis_consistency_grid_impl(); }

std::vector<CheckResult> oracle_grid_checks() {
  return {two_mode_thermal_grid(), two_mode_squeezed_grid(), two_colour_grid(),
          theta_pi_grid(),         a1_a2_grid(),             basis_consistency_grid()};
}

std::vector<CheckResult> stochastic_checks(std::uint64_t seed) {
  struct Point {
    std::string name;
    LinearGaussianModel model;
  };
  const std::vector<Point> points = {
      {"stochastic_two_mode_squeezed", build_two_mode(1.0, 1.0, {0.3, 0.25})},
      {"stochastic_two_colour", build_two_colour(1.0, 2.0, 1.0, {0.4, 0.0})},
      {"stochastic_a1_a2",
       build_three_mode(1.0, 3.0, 1.0, {0.2, 0.0}, ThreeModeVariant::a1_a2)},
  };
  std::vector<CheckResult> out;
  for (const auto& p : points) {
    SimConfig cfg;
    cfg.seed = seed;
    const SimEstimate est = simulate(p.model, cfg);
    const CovarianceMatrix v = solve_lyapunov(p.model);
    const int n = static_cast<int>(v.v.rows());
    int bad = 0;
    double worst = 0;
    std::ostringstream detail;
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        const double dev = std::abs(est.v(i, j) - v.v(i, j)) / est.std_err(i, j);
        worst = std::max(worst, dev);
        if (dev > 3.0) {
          ++bad;
          detail << "  entry (" << i << "," << j << "): " << est.v(i, j) << " vs "
                 << v.v(i, j) << " (" << dev << " SE)\n";
        }
      }
    }
    CheckResult r;
    r.name = p.name;
    r.pass = bad == 0;
    std::ostringstream d;
    d << n * (n + 1) / 2 << " entries, worst deviation " << worst << " SE";
    if (bad > 0) d << ", " << bad << " beyond 3 SE\n" << detail.str();
    r.detail = d.str();
    out.push_back(r);
  }
  return out;
}

} // namespace optomech::validation
