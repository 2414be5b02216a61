#include "optomech/stochastic.hpp"

#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

namespace optomech {

namespace {

// splitmix64 finalizer; drives the per-trajectory streams.
std::uint64_t mix64(std::uint64_t x) {
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Box-Muller over a splitmix64 stream; std::normal_distribution's consumption
// pattern is implementation-defined, this one is portable.
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : state_(seed) {}

  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * kPi * u2);
    have_spare_ = true;
    return r * std::cos(2.0 * kPi * u2);
  }

 private:
  static constexpr double kPi = 3.14159265358979323846;

  double uniform() {  // (0, 1), never exactly 0
    const std::uint64_t bits = mix64(state_ += 0x9E3779B97F4A7C15ull);
    return (static_cast<double>(bits >> 11) + 0.5) * (1.0 / 9007199254740992.0);
  }

  std::uint64_t state_;
  double spare_ = 0;
  bool have_spare_ = false;
};

double spectral_radius(const Eigen::MatrixXd& a) {
  const Eigen::EigenSolver<Eigen::MatrixXd> es(a, false);
  double r = 0;
  for (int i = 0; i < es.eigenvalues().size(); ++i)
    r = std::max(r, std::abs(es.eigenvalues()(i)));
  return r;
}

} // namespace

void SimConfig::validate(const LinearGaussianModel& model) const {
  if (!(dt > 0)) throw std::invalid_argument("SimConfig: dt must be > 0");
  if (!(burn_in >= 0) || !(sample_window > 0))
    throw std::invalid_argument("SimConfig: burn_in >= 0 and sample_window > 0 required");
  if (n_trajectories < 100)
    throw std::invalid_argument("SimConfig: n_trajectories must be >= 100");
  if (dt * spectral_radius(model.drift) >= 0.1)
    throw std::invalid_argument("SimConfig: dt * spectralRadius(A) must be < 0.1");
}

StepOperator one_step(const LinearGaussianModel& model, double dt) {
  if (!(dt > 0)) throw std::invalid_argument("one_step: dt must be > 0");
  const int n = static_cast<int>(model.drift.rows());
  // Van Loan block exponential
  Eigen::MatrixXd block = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  block.topLeftCorner(n, n) = -model.drift * dt;
  block.topRightCorner(n, n) = model.diffusion * dt;
  block.bottomRightCorner(n, n) = model.drift.transpose() * dt;
  const Eigen::MatrixXd eb = block.exp();
  StepOperator op;
  op.propagator = eb.bottomRightCorner(n, n).transpose();
  Eigen::MatrixXd q = op.propagator * eb.topRightCorner(n, n);
  op.noise_cov = 0.5 * (q + q.transpose());
  return op;
}

SimEstimate simulate(const LinearGaussianModel& model, const SimConfig& cfg) {
  cfg.validate(model);
  const StabilityReport rep = stability(model);
  if (!rep.stable)
    throw std::domain_error("simulate: model is not stable (max Re eig = " +
                            std::to_string(rep.max_real) + ")");

  const int n = static_cast<int>(model.drift.rows());
  const StepOperator op = one_step(model, cfg.dt);
  const Eigen::MatrixXd& f = op.propagator;

  const Eigen::LLT<Eigen::MatrixXd> llt(op.noise_cov);
  if (llt.info() != Eigen::Success)
    throw std::runtime_error("simulate: one-step noise covariance is not positive definite");
  const Eigen::MatrixXd noise_l = llt.matrixL();

  const long burn_steps = static_cast<long>(std::ceil(cfg.burn_in / cfg.dt));
  const long sample_steps = static_cast<long>(std::ceil(cfg.sample_window / cfg.dt));

  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd sum_sq = Eigen::MatrixXd::Zero(n, n);
  Eigen::VectorXd u(n), z(n);
  Eigen::MatrixXd traj_acc(n, n);

  for (int traj = 0; traj < cfg.n_trajectories; ++traj) {
    GaussianStream rng(mix64(cfg.seed ^ (0xA0761D6478BD642Full * (traj + 1ull))));
    u.setZero();
    traj_acc.setZero();
    for (long k = 0; k < burn_steps + sample_steps; ++k) {
      for (int i = 0; i < n; ++i) z(i) = rng.next();
      u = f * u + noise_l * z;
      if (k >= burn_steps) traj_acc.noalias() += u * u.transpose();
    }
    traj_acc /= static_cast<double>(sample_steps);
    sum += traj_acc;
    sum_sq += traj_acc.cwiseProduct(traj_acc);
  }

  const double nt = cfg.n_trajectories;
  SimEstimate est;
  est.v = sum / nt;
  est.v = 0.5 * (est.v + est.v.transpose()).eval();
  const Eigen::MatrixXd var = (sum_sq / nt - (sum / nt).cwiseProduct(sum / nt)) *
                              (nt / (nt - 1.0));
  est.std_err = (var / nt).cwiseMax(0.0).cwiseSqrt();
  est.steps_per_trajectory = burn_steps + sample_steps;
  return est;
}

} // namespace optomech
