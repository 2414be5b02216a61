// Command-line front end: single-point reports, figure sweeps, oracle/stochastic
// validation and lattice tables, all emitting CSV ready for plotting tools.

#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "optomech/coherence.hpp"
#include "optomech/config.hpp"
#include "optomech/gaussian.hpp"
#include "optomech/lattice.hpp"
#include "optomech/oracles.hpp"
#include "optomech/stochastic.hpp"
#include "optomech/validation.hpp"
#include "optomech/working_point.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitUnstable = 3;
constexpr int kExitValidation = 4;

using optomech::BathSpec;
using optomech::CovarianceMatrix;
using optomech::LinearGaussianModel;
using optomech::MomentSet;
using optomech::ThreeModeVariant;

std::string sci(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.15e", x);
  return buf;
}

std::complex<double> parse_complex(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) return {std::stod(s), 0.0};
  return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
}

struct ModelArgs {
  std::string variant;
  double gamma = 1.0;
  double nbar = 0.0;
  std::string msq = "0";
  double gamma_m = -1.0;  // <0: default 2*gamma
  double g_psi = NAN, g_theta = NAN, g_t = NAN, u = NAN;
  std::string config_path;

  BathSpec bath() const { return {nbar, parse_complex(msq)}; }
};

void add_model_flags(CLI::App* cmd, ModelArgs& a, bool with_config) {
  cmd->add_option("--variant", a.variant, "two_mode | two_colour | theta_pi | a1_a2")
      ->required()
      ->check(CLI::IsMember({"two_mode", "two_colour", "theta_pi", "a1_a2"}));
  cmd->add_option("--gamma", a.gamma, "rate unit (default 1)");
  cmd->add_option("--nbar", a.nbar, "mirror bath thermal occupation");
  cmd->add_option("--msq", a.msq, "mirror bath squeezing correlation, 're' or 're,im'");
  cmd->add_option("--gamma-m", a.gamma_m, "mechanical damping rate (must equal 2*gamma)");
  cmd->add_option("--Gpsi", a.g_psi, "two_mode coupling G_psi");
  cmd->add_option("--Gtheta", a.g_theta, "two_colour coupling G_theta");
  cmd->add_option("--Gt", a.g_t, "three-mode coupling G_t");
  cmd->add_option("--U", a.u, "polariton splitting U");
  if (with_config)
    cmd->add_option("--config", a.config_path,
                    "key=value drive config; solves the working point instead of "
                    "taking couplings directly");
}

// The secular models fix gamma_m = 2*gamma; anything else has no reduced model.
void require_gamma_m(const ModelArgs& a) {
  if (a.gamma_m >= 0 && std::abs(a.gamma_m - 2.0 * a.gamma) > 1e-12 * a.gamma)
    throw CLI::ValidationError("--gamma-m", "reduced models require gamma_m = 2*gamma");
}

LinearGaussianModel model_from_couplings(const ModelArgs& a) {
  require_gamma_m(a);
  if (a.variant == "two_mode") {
    if (std::isnan(a.g_psi)) throw CLI::ValidationError("--Gpsi", "required for two_mode");
    return optomech::build_two_mode(a.g_psi, a.gamma, a.bath());
  }
  if (a.variant == "two_colour") {
    if (std::isnan(a.g_theta) || std::isnan(a.u))
      throw CLI::ValidationError("--Gtheta/--U", "required for two_colour");
    return optomech::build_two_colour(a.g_theta, a.u, a.gamma, a.bath());
  }
  if (std::isnan(a.g_t) || std::isnan(a.u))
    throw CLI::ValidationError("--Gt/--U", "required for three-mode variants");
  const auto variant =
      a.variant == "theta_pi" ? ThreeModeVariant::theta_pi : ThreeModeVariant::a1_a2;
  return optomech::build_three_mode(a.g_t, a.u, a.gamma, a.bath(), variant);
}

std::string fmt_cd(std::complex<double> z) {
  std::ostringstream s;
  s << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return s.str();
}

void print_working_point(const optomech::WorkingPoint& wp, std::ostream& os) {
  os << "[working point]\n";
  os << "  phi = " << wp.phi << "  Omega = " << wp.Omega << "\n";
  os << "  q_s = " << wp.q_s << "  psi_s = " << fmt_cd(wp.psi_s)
     << "  phi_s = " << fmt_cd(wp.phi_s) << "\n";
  os << "  Delta_q = " << wp.Delta_q << "  Omega_tilde = " << wp.Omega_tilde << "\n";
  os << "  G_psi = " << wp.G_psi << "  G_phi = " << wp.G_phi << "  G_q = " << wp.G_q << "\n";
  os << "  varphi = " << wp.varphi << "  U = " << wp.U << "  G_theta = " << wp.G_theta
     << "  G_pi = " << wp.G_pi << "\n";
  os << "  residual = " << wp.residual << "  relative_phase = " << wp.relative_phase
     << (wp.phases_aligned ? "" : "  (WARNING: amplitudes not phase-aligned)") << "\n";
}

struct CsvSink {
  std::vector<std::array<std::string, 3>> rows;
  void put(const std::string& key, double v) { rows.push_back({key, sci(v), ""}); }
  void put(const std::string& key, std::complex<double> v) {
    rows.push_back({key, sci(v.real()), sci(v.imag())});
  }
  void write(const std::string& path, const std::string& provenance) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
    out << "# optomech " << kVersion << " " << provenance << "\n";
    out << "quantity,value_re,value_im\n";
    for (const auto& r : rows) out << r[0] << "," << r[1] << "," << r[2] << "\n";
  }
};

int cmd_point(const ModelArgs& args, const std::string& out_path) {
  std::optional<optomech::WorkingPoint> wp;
  ModelArgs a = args;
  if (!a.config_path.empty()) {
    if (!std::isnan(a.g_psi) || !std::isnan(a.g_theta) || !std::isnan(a.g_t) || !std::isnan(a.u))
      throw CLI::ValidationError("--config", "give either --config or direct couplings");
    const auto cfg = optomech::KeyValueConfig::from_file(a.config_path);
    optomech::DriveParams p = optomech::drive_params_from_config(cfg);
    a.gamma = p.gamma;
    wp = optomech::second_rotation(optomech::solve_steady_state(p));
    if (a.variant == "two_mode") {
      a.g_psi = wp->G_psi;
    } else if (a.variant == "two_colour") {
      a.g_theta = wp->G_theta;
      a.u = wp->U;
    } else {
      if (!wp->has_G_t) {
        std::cerr << "error: working point has G_theta != -G_pi (phi + varphi != pi/4), so "
                  << "the " << a.variant << " model does not apply; pass --Gt and --U "
                  << "directly to study the idealized coupling\n";
        return kExitConfig;
      }
      a.g_t = wp->G_t;
      a.u = wp->U;
    }
  }

  const LinearGaussianModel model = model_from_couplings(a);
  const auto stab = optomech::stability(model);

  std::ostream& os = std::cout;
  CsvSink csv;
  os << "variant: " << a.variant << "  gamma: " << a.gamma << "  nbar: " << a.nbar
     << "  m: " << fmt_cd(parse_complex(a.msq)) << "\n";
  if (wp) print_working_point(*wp, os);

  os << "[stability]\n  stable: " << (stab.stable ? "yes" : "no")
     << "  max Re eig = " << stab.max_real << (stab.marginal ? " (marginal)" : "") << "\n";
  os << "  eigenvalues:";
  for (const auto& ev : stab.eigenvalues) os << " " << fmt_cd(ev);
  os << "\n";
  csv.put("stable", stab.stable ? 1.0 : 0.0);
  csv.put("max_re_eig", stab.max_real);

  if (!stab.stable) {
    os << "configuration is unstable; no steady state\n";
    if (!out_path.empty()) csv.write(out_path, "point (unstable)");
    return kExitUnstable;
  }

  const CovarianceMatrix v = optomech::solve_lyapunov(model);
  const auto phys = optomech::check_physicality(v);
  os << "[covariance]\n  physical: " << (phys.ok ? "yes" : "NO")
     << "  min symplectic eig = " << phys.min_symplectic << "\n";
  csv.put("min_symplectic", phys.min_symplectic);

  const int m = v.modes();
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const std::string pair = model.mode_labels[i] + "-" + model.mode_labels[j];
      const MomentSet ms = optomech::quad_to_complex_moments(v, i, j);
      const double en = optomech::log_negativity(optomech::reduce(v, i, j));
      os << "[pair " << pair << "]\n";
      os << "  n_" << model.mode_labels[i] << " = " << ms.n_a << "  n_"
         << model.mode_labels[j] << " = " << ms.n_b << "\n";
      os << "  <A²> = " << fmt_cd(ms.aa) << "  <B²> = " << fmt_cd(ms.bb) << "\n";
      os << "  <A†B> = " << fmt_cd(ms.adag_b) << "  <AB> = " << fmt_cd(ms.ab) << "\n";
      os << "  E_N = " << en << "\n";
      csv.put(pair + ".n_a", ms.n_a);
      csv.put(pair + ".n_b", ms.n_b);
      csv.put(pair + ".aa", ms.aa);
      csv.put(pair + ".bb", ms.bb);
      csv.put(pair + ".adag_b", ms.adag_b);
      csv.put(pair + ".ab", ms.ab);
      csv.put(pair + ".E_N", en);
      if (ms.n_a > 0 && ms.n_b > 0) {
        const auto deg = optomech::degrees(ms);
        os << "  gamma1 = " << deg.gamma1 << "  eta_aa = " << deg.eta_aa
           << "  eta_bb = " << deg.eta_bb << "  eta_ab = " << deg.eta_ab << "\n";
        os << "  g2_a = " << deg.g2_a << "  g2_b = " << deg.g2_b << "  g2_ab = " << deg.g2_ab
           << "\n";
        os << "  chi = " << deg.chi << "  CS violated: " << (deg.cs_violated ? "yes" : "no")
           << "\n";
        csv.put(pair + ".gamma1", deg.gamma1);
        csv.put(pair + ".eta_aa", deg.eta_aa);
        csv.put(pair + ".eta_bb", deg.eta_bb);
        csv.put(pair + ".eta_ab", deg.eta_ab);
        csv.put(pair + ".chi", deg.chi);
      } else {
        os << "  degrees: undefined (zero occupation)\n";
      }
    }
  }
  if (!out_path.empty()) csv.write(out_path, "point variant=" + a.variant);
  return kExitOk;
}

struct SweepSpec {
  std::string header1, header2, quantity;
  std::vector<double> axis1, axis2;
  // returns the quantity or NaN for unstable points
  std::function<double(double, double)> eval;
};

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
  return v;
}

std::vector<double> open_low(double lo, double hi, int n) {  // (lo, hi]
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = lo + (hi - lo) * (i + 1) / n;
  return v;
}

std::vector<double> open_both(double lo, double hi, int n) {  // (lo, hi)
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = lo + (hi - lo) * (i + 0.5) / n;
  return v;
}

double en_of(const LinearGaussianModel& model, int mode_a, int mode_b) {
  if (!optomech::stability(model).stable) return NAN;
  const CovarianceMatrix v = optomech::solve_lyapunov(model);
  return optomech::log_negativity(optomech::reduce(v, mode_a, mode_b));
}

double chi_of(const LinearGaussianModel& model, int mode_a, int mode_b) {
  if (!optomech::stability(model).stable) return NAN;
  const CovarianceMatrix v = optomech::solve_lyapunov(model);
  try {
    return optomech::cs_parameter(optomech::quad_to_complex_moments(v, mode_a, mode_b));
  } catch (const std::domain_error&) {
    return -std::numeric_limits<double>::infinity();  // zero occupation: chi undefined
  }
}

SweepSpec figure_spec(const std::string& figure, int grid, double gamma) {
  SweepSpec s;
  if (figure == "fig2" || figure == "fig3") {
    s.header1 = "nbar";
    s.header2 = "G_psi_over_gamma";
    s.axis1 = linspace(0.0, 1.5, grid);
    s.axis2 = open_both(0.0, 2.0, grid);
    if (figure == "fig2") {
      s.quantity = "E_N";
      s.eval = [gamma](double nbar, double g) {
        return en_of(optomech::build_two_mode(g * gamma, gamma, {nbar, 0.0}), 0, 1);
      };
    } else {
      s.quantity = "chi";
      s.eval = [gamma](double nbar, double g) {
        const double m = std::sqrt(nbar * (nbar + 1.0));
        return chi_of(optomech::build_two_mode(g * gamma, gamma, {nbar, m}), 0, 1);
      };
    }
  } else if (figure == "fig4") {
    s.header1 = "nbar";
    s.header2 = "U_over_gamma";
    s.quantity = "E_N";
    s.axis1 = linspace(0.0, 1.5, grid);
    s.axis2 = linspace(0.0, 10.0, grid);
    s.eval = [gamma](double nbar, double u) {
      return en_of(optomech::build_two_colour(gamma, u * gamma, gamma, {nbar, 0.0}), 0, 1);
    };
  } else if (figure == "fig5") {
    s.header1 = "nbar";
    s.header2 = "U_over_gamma";
    s.quantity = "E_N";
    s.axis1 = linspace(0.0, 1.5, grid);
    s.axis2 = open_low(1.0 / std::sqrt(2.0), 10.0, grid);
    s.eval = [gamma](double nbar, double u) {
      return en_of(optomech::build_three_mode(gamma, u * gamma, gamma, {nbar, 0.0},
                                              ThreeModeVariant::a1_a2),
                   0, 2);
    };
  } else {
    throw CLI::ValidationError("--figure", "unknown figure '" + figure + "'");
  }
  return s;
}

SweepSpec custom_spec(const ModelArgs& base, const std::string& x_spec,
                      const std::string& y_spec, const std::string& quantity, int grid) {
  auto parse_axis = [grid](const std::string& spec, std::string& name) {
    const auto eq = spec.find('=');
    const auto colon = spec.find(':', eq);
    if (eq == std::string::npos || colon == std::string::npos)
      throw CLI::ValidationError("--x/--y", "axis spec must be name=lo:hi");
    name = spec.substr(0, eq);
    if (name != "nbar" && name != "coupling" && name != "U")
      throw CLI::ValidationError("--x/--y", "axis name must be nbar, coupling or U");
    const double lo = std::stod(spec.substr(eq + 1, colon - eq - 1));
    const double hi = std::stod(spec.substr(colon + 1));
    return linspace(lo, hi, grid);
  };
  SweepSpec s;
  s.axis1 = parse_axis(x_spec, s.header1);
  s.axis2 = parse_axis(y_spec, s.header2);
  if (s.header1 == s.header2)
    throw CLI::ValidationError("--x/--y", "the two axes must differ");
  s.quantity = quantity;
  // reported pair: the two polaritons for theta_pi, (b, A2) for a1_a2,
  // (b, polariton) otherwise
  const int pair_a = base.variant == "theta_pi" ? 1 : 0;
  const int pair_b = base.variant == "theta_pi" ? 2 : (base.variant == "a1_a2" ? 2 : 1);
  s.eval = [base, quantity, pair_a, pair_b, h1 = s.header1, h2 = s.header2](double x,
                                                                            double y) {
    ModelArgs a = base;
    auto assign = [&a](const std::string& name, double value) {
      if (name == "nbar") {
        a.nbar = value;
      } else if (name == "U") {
        a.u = value;
      } else {
        a.g_psi = a.g_theta = a.g_t = value;
      }
    };
    assign(h1, x);
    assign(h2, y);
    const LinearGaussianModel model = model_from_couplings(a);
    return quantity == "EN" ? en_of(model, pair_a, pair_b) : chi_of(model, pair_a, pair_b);
  };
  return s;
}

int run_sweep(const SweepSpec& spec, const std::string& out_path,
              const std::string& provenance) {
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw std::runtime_error("cannot open output file '" + out_path + "'");
    os = &file;
  }
  *os << "# optomech " << kVersion << " " << provenance << "\n";
  *os << spec.header1 << "," << spec.header2 << "," << spec.quantity << "\n";
  for (double x : spec.axis1) {
    for (double y : spec.axis2) {
      const double q = spec.eval(x, y);
      *os << sci(x) << "," << sci(y) << ",";
      if (std::isnan(q))
        *os << "unstable\n";
      else if (std::isinf(q) && q < 0)
        *os << "undefined\n";
      else
        *os << sci(q) << "\n";
    }
  }
  return kExitOk;
}

int cmd_validate(std::uint64_t seed, bool skip_stochastic) {
  auto checks = optomech::validation::oracle_grid_checks();
  if (!skip_stochastic) {
    auto st = optomech::validation::stochastic_checks(seed);
    checks.insert(checks.end(), st.begin(), st.end());
  }
  bool all = true;
  for (const auto& c : checks) {
    std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
    all = all && c.pass;
  }
  std::cout << (all ? "validation passed" : "validation FAILED") << "\n";
  return all ? kExitOk : kExitValidation;
}

int cmd_lattice(const optomech::LatticeParams& p, double gamma, int kmax,
                const std::string& out_path) {
  const double j = optomech::dipole_dipole_J(p);
  std::cout << "J_alpha = " << sci(j) << " rad/s\n";
  std::cout << "k,omega_k [rad/s],f_k [rad/s]\n";
  std::ostringstream rows;
  for (int k = 1; k <= std::min(kmax, p.n_sites); ++k) {
    const double w = optomech::exciton_frequency(p, k);
    rows << k << "," << sci(w) << ",";
    if (k % 2 == 1)
      rows << sci(optomech::exciton_cavity_coupling(p, k));
    rows << "\n";
  }
  std::cout << rows.str();
  const auto units = optomech::to_drive_units(p, gamma);
  std::cout << "in units of gamma = " << sci(gamma) << ": delta = " << units.delta
            << ", f1 = " << units.f1 << ", Omega = " << units.Omega << "\n";
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open output file '" + out_path + "'");
    out << "# optomech " << kVersion << " lattice\n";
    out << "k,omega_k,f_k\n" << rows.str();
  }
  return kExitOk;
}

int cmd_simulate(const ModelArgs& args, const optomech::SimConfig& cfg,
                 const std::string& out_path) {
  const LinearGaussianModel model = model_from_couplings(args);
  if (!optomech::stability(model).stable) {
    std::cerr << "error: configuration is unstable\n";
    return kExitUnstable;
  }
  const auto est = optomech::simulate(model, cfg);
  const CovarianceMatrix v = optomech::solve_lyapunov(model);
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw std::runtime_error("cannot open output file '" + out_path + "'");
    os = &file;
  }
  *os << "# optomech " << kVersion << " simulate variant=" << args.variant
      << " seed=" << cfg.seed << " dt=" << cfg.dt << " traj=" << cfg.n_trajectories << "\n";
  *os << "i,j,estimate,std_err,lyapunov\n";
  for (int i = 0; i < est.v.rows(); ++i)
    for (int j = i; j < est.v.cols(); ++j)
      *os << i << "," << j << "," << sci(est.v(i, j)) << "," << sci(est.std_err(i, j)) << ","
          << sci(v.v(i, j)) << "\n";
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"steady-state moments, entanglement and coherence of the three-mode "
               "polariton-mirror model"};
  app.require_subcommand(1);

  ModelArgs point_args;
  std::string point_out;
  auto* point = app.add_subcommand("point", "full report for one configuration");
  add_model_flags(point, point_args, /*with_config=*/true);
  point->add_option("--out", point_out, "also write the report as CSV");

  std::string figure, sweep_out, sweep_x, sweep_y, sweep_quantity = "EN";
  int grid = 50;
  ModelArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "grid sweep emitting CSV");
  sweep->add_option("--figure", figure, "fig2 | fig3 | fig4 | fig5");
  sweep->add_option("--grid", grid, "grid points per axis (default 50)")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--out", sweep_out, "output CSV file (default stdout)");
  sweep->add_option("--gamma", sweep_args.gamma, "rate unit (default 1)");
  // custom grid
  sweep->add_option("--variant", sweep_args.variant,
                    "custom sweep variant (two_mode | two_colour | theta_pi | a1_a2)")
      ->check(CLI::IsMember({"two_mode", "two_colour", "theta_pi", "a1_a2"}));
  sweep->add_option("--x", sweep_x, "custom axis 1, name=lo:hi (nbar | coupling | U)");
  sweep->add_option("--y", sweep_y, "custom axis 2, name=lo:hi");
  sweep->add_option("--quantity", sweep_quantity, "EN | chi")
      ->check(CLI::IsMember({"EN", "chi"}));
  sweep->add_option("--nbar", sweep_args.nbar, "fixed nbar for custom sweeps");
  sweep->add_option("--msq", sweep_args.msq, "fixed squeezing for custom sweeps");
  sweep->add_option("--U", sweep_args.u, "fixed U for custom sweeps");
  sweep->add_option("--Gpsi", sweep_args.g_psi, "fixed coupling for custom sweeps");
  sweep->add_option("--Gtheta", sweep_args.g_theta, "fixed coupling for custom sweeps");
  sweep->add_option("--Gt", sweep_args.g_t, "fixed coupling for custom sweeps");

  std::uint64_t seed = 1;
  bool skip_stochastic = false;
  auto* validate = app.add_subcommand("validate", "oracle-vs-pipeline and stochastic checks");
  validate->add_option("--seed", seed, "stochastic verification seed");
  validate->add_flag("--skip-stochastic", skip_stochastic, "grid checks only");

  optomech::LatticeParams lat{1000, 390e-9, 5e-29, 1.5707963267948966, 2.5e15, 2.5e15, 1e-10};
  std::string lattice_config, lattice_out;
  double lattice_gamma = 1e6;
  int kmax = 7;
  auto* lattice = app.add_subcommand("lattice", "exciton spectrum and couplings (SI units)");
  lattice->add_option("--config", lattice_config, "key=value lattice parameter file");
  lattice->add_option("--n-sites", lat.n_sites, "number of lattice sites N");
  lattice->add_option("--spacing-d", lat.spacing_d, "site spacing [m]");
  lattice->add_option("--dipole-mu", lat.dipole_mu, "transition dipole moment [C m]");
  lattice->add_option("--angle-alpha", lat.angle_alpha, "dipole angle [rad]");
  lattice->add_option("--omega-a", lat.omega_a, "atomic transition frequency [rad/s]");
  lattice->add_option("--omega-c", lat.omega_c, "cavity frequency [rad/s]");
  lattice->add_option("--mode-volume", lat.mode_volume_V, "cavity mode volume [m^3]");
  lattice->add_option("--gamma", lattice_gamma, "rate unit for the exported couplings [rad/s]");
  lattice->add_option("--kmax", kmax, "table rows");
  lattice->add_option("--out", lattice_out, "output CSV file");

  ModelArgs sim_args;
  optomech::SimConfig sim_cfg;
  std::string sim_out;
  auto* simulate = app.add_subcommand("simulate", "stochastic moment estimates vs Lyapunov");
  add_model_flags(simulate, sim_args, /*with_config=*/false);
  simulate->add_option("--dt", sim_cfg.dt, "time step [1/gamma]");
  simulate->add_option("--burn-in", sim_cfg.burn_in, "discarded transient [1/gamma]");
  simulate->add_option("--window", sim_cfg.sample_window, "averaging window [1/gamma]");
  simulate->add_option("--trajectories", sim_cfg.n_trajectories, "ensemble size (>= 100)");
  simulate->add_option("--seed", sim_cfg.seed, "RNG seed");
  simulate->add_option("--out", sim_out, "output CSV file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (point->parsed()) return cmd_point(point_args, point_out);
    if (sweep->parsed()) {
      if (!figure.empty()) {
        const SweepSpec spec = figure_spec(figure, grid, sweep_args.gamma);
        std::ostringstream prov;
        prov << "sweep figure=" << figure << " grid=" << grid << " gamma=" << sweep_args.gamma;
        return run_sweep(spec, sweep_out, prov.str());
      }
      if (sweep_args.variant.empty() || sweep_x.empty() || sweep_y.empty())
        throw CLI::ValidationError("sweep", "give --figure or --variant with --x and --y");
      const SweepSpec spec = custom_spec(sweep_args, sweep_x, sweep_y, sweep_quantity, grid);
      std::ostringstream prov;
      prov << "sweep variant=" << sweep_args.variant << " x=" << sweep_x << " y=" << sweep_y
           << " quantity=" << sweep_quantity << " grid=" << grid
           << " gamma=" << sweep_args.gamma << " nbar=" << sweep_args.nbar
           << " msq=" << sweep_args.msq;
      return run_sweep(spec, sweep_out, prov.str());
    }
    if (validate->parsed()) return cmd_validate(seed, skip_stochastic);
    if (lattice->parsed()) {
      optomech::LatticeParams p = lat;
      if (!lattice_config.empty())
        p = optomech::lattice_params_from_config(
            optomech::KeyValueConfig::from_file(lattice_config));
      return cmd_lattice(p, lattice_gamma, kmax, lattice_out);
    }
    if (simulate->parsed()) return cmd_simulate(sim_args, sim_cfg, sim_out);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const optomech::MultistabilityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnstable;
  } catch (const optomech::SteadyStateError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnstable;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnstable;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitOk;
}
