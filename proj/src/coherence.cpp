#include "optomech/coherence.hpp"

#include <cmath>
#include <stdexcept>

namespace optomech {

CoherenceReport degrees(const MomentSet& ms) {
  if (!(ms.n_a > 0) || !(ms.n_b > 0))
    throw std::domain_error("degrees: undefined degree, both occupations must be > 0"
                            " (n_a=" + std::to_string(ms.n_a) +
                            ", n_b=" + std::to_string(ms.n_b) + ")");
  CoherenceReport r;
  const double cross = std::sqrt(ms.n_a * ms.n_b);
  r.gamma1 = std::abs(ms.adag_b) / cross;
  r.eta_ab = std::abs(ms.ab) / cross;
  r.eta_aa = std::abs(ms.aa) / ms.n_a;
  r.eta_bb = std::abs(ms.bb) / ms.n_b;
  r.g2_a = 2.0 + r.eta_aa * r.eta_aa;
  r.g2_b = 2.0 + r.eta_bb * r.eta_bb;
  r.g2_ab = 1.0 + r.gamma1 * r.gamma1 + r.eta_ab * r.eta_ab;
  r.chi = r.g2_a * r.g2_b / (r.g2_ab * r.g2_ab);
  r.cs_violated = r.chi < 1.0;
  return r;
}

double cs_parameter(const MomentSet& ms) { return degrees(ms).chi; }

} // namespace optomech
