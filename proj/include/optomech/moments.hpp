#pragma once

#include <complex>

namespace optomech {

/// Equal-time second moments of a mode pair (A, B).
struct MomentSet {
  double n_a = 0;                     // <A†A>
  double n_b = 0;                     // <B†B>
  std::complex<double> aa{0, 0};      // <A²>
  std::complex<double> bb{0, 0};      // <B²>
  std::complex<double> adag_b{0, 0};  // <A†B>
  std::complex<double> ab{0, 0};      // <AB>
};

} // namespace optomech
