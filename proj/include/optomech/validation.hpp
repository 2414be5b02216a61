#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace optomech::validation {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // empty on pass, diagnostic on failure
};

// Oracle-vs-pipeline equivalence on dense stability-domain grids (1e-9
// relative) plus physicality of every covariance produced along the way.
CheckResult two_mode_thermal_grid();
CheckResult two_mode_squeezed_grid();
CheckResult two_colour_grid();
CheckResult theta_pi_grid();
CheckResult a1_a2_grid();
CheckResult basis_consistency_grid();
std::vector<CheckResult> oracle_grid_checks();

// Covariance entries from the stochastic integrator within 3 standard errors
// of the Lyapunov solution at one representative point per variant family.
std::vector<CheckResult> stochastic_checks(std::uint64_t seed);

} // namespace optomech::validation
