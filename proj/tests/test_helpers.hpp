#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>

#include <Eigen/Dense>

namespace testutil {

inline bool rel_close(double a, double b, double tol = 1e-9) {
  return std::abs(a - b) <= tol * std::max({std::abs(a), std::abs(b), 1.0});
}

inline bool rel_close(std::complex<double> a, std::complex<double> b, double tol = 1e-9) {
  return std::abs(a - b) <= tol * std::max({std::abs(a), std::abs(b), 1.0});
}

// xorshift-based deterministic doubles for property tests
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : s_(seed ? seed : 0x1234567ull) {}
  double uniform(double lo, double hi) {
    s_ ^= s_ << 13;
    s_ ^= s_ >> 7;
    s_ ^= s_ << 17;
    return lo + (hi - lo) * (static_cast<double>(s_ >> 11) / 9007199254740992.0);
  }

 private:
  std::uint64_t s_;
};

// Random Hurwitz-stable drift and PSD diffusion for property tests.
inline void random_stable_system(Rng& rng, int n, Eigen::MatrixXd& a, Eigen::MatrixXd& d) {
  a.resize(n, n);
  Eigen::MatrixXd l(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      a(i, j) = rng.uniform(-1.0, 1.0);
      l(i, j) = rng.uniform(-1.0, 1.0);
    }
  const Eigen::VectorXcd ev = a.eigenvalues();
  double max_re = -1e300;
  for (int i = 0; i < n; ++i) max_re = std::max(max_re, ev(i).real());
  a -= (max_re + 0.5) * Eigen::MatrixXd::Identity(n, n);
  d = l * l.transpose() + 0.1 * Eigen::MatrixXd::Identity(n, n);
}

} // namespace testutil
