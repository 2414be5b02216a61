#include "optomech/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace optomech {

namespace {

using cd = std::complex<double>;

// 2x2 diffusion block of a mode damped at rate gamma whose reservoir has
// thermal occupation n_bar and two-photon correlation m.
Eigen::Matrix2d bath_block(double gamma, double n_bar, cd m) {
  Eigen::Matrix2d d;
  d << (2.0 * n_bar + 1.0 + 2.0 * m.real()) * gamma, 2.0 * gamma * m.imag(),
       2.0 * gamma * m.imag(), (2.0 * n_bar + 1.0 - 2.0 * m.real()) * gamma;
  return d;
}

Eigen::MatrixXd diffusion_matrix(int n_modes, double gamma, const BathSpec& bath) {
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(2 * n_modes, 2 * n_modes);
  d.topLeftCorner<2, 2>() = bath_block(gamma, bath.n_bar, bath.m_sq);
  for (int i = 2; i < 2 * n_modes; ++i) d(i, i) = gamma;
  return d;
}

Eigen::MatrixXd omega_sym(int n_modes) {
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(2 * n_modes, 2 * n_modes);
  for (int i = 0; i < n_modes; ++i) {
    w(2 * i, 2 * i + 1) = 1.0;
    w(2 * i + 1, 2 * i) = -1.0;
  }
  return w;
}

void require_gamma(double gamma) {
  if (!(gamma > 0)) throw std::invalid_argument("model builder: gamma must be > 0");
}

void require_pair(const CovarianceMatrix& v) {
  if (v.v.rows() != 4 || v.v.cols() != 4)
    throw std::invalid_argument("expected a two-mode (4x4) covariance");
}

} // namespace

void BathSpec::validate() const {
  if (!(n_bar >= 0)) throw std::invalid_argument("BathSpec: n_bar must be >= 0");
  const double limit = std::sqrt(n_bar * (n_bar + 1.0));
  if (std::abs(m_sq) > limit * (1.0 + 1e-12) + 1e-15)
    throw std::invalid_argument("BathSpec: |m_sq| exceeds sqrt(n_bar (n_bar+1))");
}

LinearGaussianModel build_two_mode(double G_psi, double gamma, const BathSpec& bath) {
  require_gamma(gamma);
  bath.validate();
  const double g = 0.5 * G_psi;
  Eigen::MatrixXd a(4, 4);
  a << -gamma,    0,      0,   -g,
           0, -gamma,    -g,    0,
           0,     -g, -gamma,   0,
          -g,      0,      0, -gamma;
  return {a, diffusion_matrix(2, gamma, bath), {"b", "psi"}, gamma, bath};
}

LinearGaussianModel build_two_colour(double G_theta, double U, double gamma,
                                     const BathSpec& bath) {
  require_gamma(gamma);
  bath.validate();
  const double g = 0.5 * G_theta;
  Eigen::MatrixXd a(4, 4);
  a << -gamma,    0,      0,     -g,
           0, -gamma,    -g,      0,
           0,     -g, -gamma,     U,
          -g,      0,     -U, -gamma;
  return {a, diffusion_matrix(2, gamma, bath), {"b", "theta"}, gamma, bath};
}

LinearGaussianModel build_three_mode(double G_t, double U, double gamma, const BathSpec& bath,
                                     ThreeModeVariant variant) {
  require_gamma(gamma);
  bath.validate();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(6, 6);
  if (variant == ThreeModeVariant::theta_pi) {
    const double lt = 0.5 * G_t;   // G_theta = G_t
    const double lp = -0.5 * G_t;  // G_pi = -G_t
    a << -gamma,    0,      0,  -lt,      0,  -lp,
             0, -gamma,   -lt,    0,    -lp,    0,
             0,    -lt, -gamma,   U,      0,    0,
           -lt,      0,    -U, -gamma,    0,    0,
             0,    -lp,     0,    0, -gamma,   -U,
           -lp,      0,     0,    0,      U, -gamma;
    return {a, diffusion_matrix(3, gamma, bath), {"b", "theta", "pi"}, gamma, bath};
  }
  const double l = G_t / std::sqrt(2.0);
  a << -gamma,    0,      0,    -l,      0,    0,
           0, -gamma,    -l,     0,      0,    0,
           0,     -l, -gamma,    0,      0,    U,
          -l,      0,     0, -gamma,    -U,    0,
           0,      0,     0,     U, -gamma,    0,
           0,      0,    -U,     0,      0, -gamma;
  return {a, diffusion_matrix(3, gamma, bath), {"b", "a1", "a2"}, gamma, bath};
}

Eigen::MatrixXd theta_pi_to_a1_a2_rotation() {
  const double s = 1.0 / std::sqrt(2.0);
  Eigen::MatrixXd r = Eigen::MatrixXd::Zero(6, 6);
  r(0, 0) = r(1, 1) = 1.0;
  // a1 = (theta - pi)/sqrt2, a2 = (theta + pi)/sqrt2, per quadrature
  r(2, 2) = s; r(2, 4) = -s;
  r(3, 3) = s; r(3, 5) = -s;
  r(4, 2) = s; r(4, 4) = s;
  r(5, 3) = s; r(5, 5) = s;
  return r;
}

StabilityReport stability(const LinearGaussianModel& model) {
  StabilityReport rep;
  const Eigen::EigenSolver<Eigen::MatrixXd> es(model.drift, /*computeEigenvectors=*/false);
  rep.max_real = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    rep.eigenvalues.push_back(es.eigenvalues()(i));
    rep.max_real = std::max(rep.max_real, es.eigenvalues()(i).real());
  }
  const double margin = 1e-9 * model.gamma;
  rep.stable = rep.max_real < -margin;
  rep.marginal = !rep.stable && rep.max_real < margin;
  return rep;
}

CovarianceMatrix solve_lyapunov(const LinearGaussianModel& model) {
  const StabilityReport rep = stability(model);
  if (!rep.stable) {
    std::ostringstream msg;
    msg << "solve_lyapunov: model is not stable (max Re eig = " << rep.max_real
        << (rep.marginal ? ", marginal)" : ")");
    throw std::domain_error(msg.str());
  }
  const Eigen::MatrixXd& a = model.drift;
  const Eigen::MatrixXd& d = model.diffusion;
  const int n = static_cast<int>(a.rows());

  // (I (x) A + A (x) I) vec(V) = -vec(D), column-major vec.
  Eigen::MatrixXd k = Eigen::MatrixXd::Zero(n * n, n * n);
  for (int col = 0; col < n; ++col)
    k.block(n * col, n * col, n, n) += a;            // I (x) A
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int r = 0; r < n; ++r)
        k(n * i + r, n * j + r) += a(i, j);          // A (x) I
  Eigen::VectorXd rhs(n * n);
  for (int col = 0; col < n; ++col) rhs.segment(n * col, n) = -d.col(col);

  const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(k);
  if (!qr.isInvertible()) {
    std::ostringstream msg;
    msg << "solve_lyapunov: singular Kronecker system (rank " << qr.rank() << " of " << n * n
        << ", |R00/Rkk| = " << std::abs(qr.matrixR()(0, 0) / qr.matrixR()(n * n - 1, n * n - 1))
        << ")";
    throw std::runtime_error(msg.str());
  }
  const Eigen::VectorXd x = qr.solve(rhs);
  Eigen::MatrixXd v(n, n);
  for (int col = 0; col < n; ++col) v.col(col) = x.segment(n * col, n);
  v = 0.5 * (v + v.transpose()).eval();

  const double res = (a * v + v * a.transpose() + d).cwiseAbs().maxCoeff();
  const double scale = std::max(d.cwiseAbs().maxCoeff(), 1e-300);
  if (res > 1e-12 * scale)
    throw std::runtime_error("solve_lyapunov: residual " + std::to_string(res / scale) +
                             " exceeds 1e-12 of ||D||_max");
  return {v};
}

CovarianceMatrix reduce(const CovarianceMatrix& v, int mode_a, int mode_b) {
  const int m = v.modes();
  if (mode_a < 0 || mode_a >= m || mode_b < 0 || mode_b >= m || mode_a == mode_b)
    throw std::out_of_range("reduce: invalid mode pair");
  const int idx[4] = {2 * mode_a, 2 * mode_a + 1, 2 * mode_b, 2 * mode_b + 1};
  Eigen::MatrixXd out(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out(i, j) = v.v(idx[i], idx[j]);
  return {out};
}

std::vector<double> symplectic_eigenvalues(const CovarianceMatrix& v) {
  const int m = v.modes();
  const Eigen::MatrixXcd iov = cd(0, 1) * (omega_sym(m) * v.v).cast<cd>();
  const Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(iov, false);
  std::vector<double> mods;
  for (int i = 0; i < es.eigenvalues().size(); ++i) mods.push_back(std::abs(es.eigenvalues()(i)));
  std::sort(mods.begin(), mods.end());
  // eigenvalues come in +/- pairs; keep one of each
  std::vector<double> out;
  for (int i = 0; i < m; ++i) out.push_back(0.5 * (mods[2 * i] + mods[2 * i + 1]));
  return out;
}

PhysicalityReport check_physicality(const CovarianceMatrix& v, double tol) {
  PhysicalityReport rep;
  const int m = v.modes();
  Eigen::MatrixXcd h = v.v.cast<cd>() + cd(0, 0.5) * omega_sym(m).cast<cd>();
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  rep.min_uncertainty_eig = es.eigenvalues().minCoeff();
  const std::vector<double> nu = symplectic_eigenvalues(v);
  rep.min_symplectic = *std::min_element(nu.begin(), nu.end());
  rep.ok = rep.min_uncertainty_eig >= -tol && rep.min_symplectic >= 0.5 - tol;
  return rep;
}

double log_negativity(const CovarianceMatrix& v4, double phys_tol) {
  require_pair(v4);
  if (!check_physicality(v4, phys_tol).ok)
    throw std::domain_error("log_negativity: covariance violates the uncertainty relation");
  Eigen::MatrixXd vt = v4.v;
  vt.row(3) *= -1.0;  // partial transpose = sign flip of the second mode's momentum
  vt.col(3) *= -1.0;
  const std::vector<double> nu = symplectic_eigenvalues({vt});
  const double vs = nu.front();
  const double en = -std::log2(2.0 * vs);
  return en > 1e-12 ? en : 0.0;  // floor: separable states report exactly 0
}

MomentSet quad_to_complex_moments(const CovarianceMatrix& v, int mode_a, int mode_b) {
  const CovarianceMatrix r = reduce(v, mode_a, mode_b);
  const Eigen::MatrixXd& w = r.v;
  MomentSet ms;
  ms.n_a = 0.5 * (w(0, 0) + w(1, 1) - 1.0);
  ms.n_b = 0.5 * (w(2, 2) + w(3, 3) - 1.0);
  ms.aa = cd(0.5 * (w(0, 0) - w(1, 1)), w(0, 1));
  ms.bb = cd(0.5 * (w(2, 2) - w(3, 3)), w(2, 3));
  ms.adag_b = 0.5 * cd(w(0, 2) + w(1, 3), w(0, 3) - w(1, 2));
  ms.ab = 0.5 * cd(w(0, 2) - w(1, 3), w(0, 3) + w(1, 2));
  return ms;
}

CovarianceMatrix moments_to_quad(const MomentSet& ms) {
  Eigen::MatrixXd w(4, 4);
  w(0, 0) = 0.5 + ms.n_a + ms.aa.real();
  w(1, 1) = 0.5 + ms.n_a - ms.aa.real();
  w(0, 1) = w(1, 0) = ms.aa.imag();
  w(2, 2) = 0.5 + ms.n_b + ms.bb.real();
  w(3, 3) = 0.5 + ms.n_b - ms.bb.real();
  w(2, 3) = w(3, 2) = ms.bb.imag();
  w(0, 2) = w(2, 0) = ms.adag_b.real() + ms.ab.real();
  w(1, 3) = w(3, 1) = ms.adag_b.real() - ms.ab.real();
  w(0, 3) = w(3, 0) = ms.adag_b.imag() + ms.ab.imag();
  w(1, 2) = w(2, 1) = ms.ab.imag() - ms.adag_b.imag();
  return {w};
}

double quadrature_variance(const CovarianceMatrix& v, const Eigen::VectorXd& coeffs) {
  if (coeffs.size() != v.v.rows())
    throw std::invalid_argument("quadrature_variance: coefficient size mismatch");
  return coeffs.dot(v.v * coeffs);
}

} // namespace optomech
