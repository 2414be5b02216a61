#pragma once

#include "optomech/moments.hpp"

namespace optomech {

struct CoherenceReport {
  double gamma1 = 0;   // |<A†B>| / sqrt(n_a n_b), first-order coherence
  double eta_aa = 0;   // |<A²>| / n_a
  double eta_bb = 0;   // |<B²>| / n_b
  double eta_ab = 0;   // |<AB>| / sqrt(n_a n_b)
  double g2_a = 0;     // 2 + eta_aa²   (Gaussian statistics)
  double g2_b = 0;     // 2 + eta_bb²
  double g2_ab = 0;    // 1 + gamma1² + eta_ab²
  double chi = 0;      // g2_a g2_b / g2_ab²
  bool cs_violated = false;  // chi < 1
};

/// Coherence degrees of a mode pair. Both occupations must be strictly
/// positive; the degrees are undefined at zero occupation and the call throws.
CoherenceReport degrees(const MomentSet& ms);

/// Cauchy-Schwarz parameter alone (same preconditions as degrees).
double cs_parameter(const MomentSet& ms);

} // namespace optomech
