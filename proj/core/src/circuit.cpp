#include "daqc/circuit.hpp"

#include <cmath>
#include <complex>

#include <Eigen/Eigenvalues>

#include "daqc/pauli.hpp"

namespace daqc {

namespace {

void require_positive(double v, const char* name) {
  if (!(v > 0.0)) throw ValidationError(std::string(name) + " must be positive");
}

}  // namespace

void TwoQubitCircuitParams::validate() const {
  require_positive(c_g1, "C_g1");
  require_positive(c_g2, "C_g2");
  require_positive(c_j1, "C_J1");
  require_positive(c_j2, "C_J2");
  require_positive(c_c, "C_c");
  require_positive(c_s, "C_s");
  require_positive(e_j1, "E_J1");
  require_positive(e_j2, "E_J2");
  require_positive(e_js, "E_Js");
}

void ThreeQubitCircuitParams::validate() const {
  require_positive(c_g1, "C_g1");
  require_positive(c_g2, "C_g2");
  require_positive(c_j1, "C_J1");
  require_positive(c_j2, "C_J2");
  require_positive(c_c, "C_c");
  require_positive(c_s, "C_s");
  require_positive(e_j1, "E_J1");
  require_positive(e_j2, "E_J2");
  require_positive(e_js, "E_Js");
}

std::optional<std::string> FluxBias::smallness_warning() const {
  const double cap = 0.1 * std::abs(phi_dc);
  if (std::abs(a1) > cap || std::abs(a2) > cap)
    return "AC flux amplitude exceeds 0.1*|phi_DC|; the linearized drive "
           "expansion degrades";
  return std::nullopt;
}

double squid_effective_ej(double e_js, double phi_ext) {
  const double c = std::cos(phi_ext);
  if (std::abs(c) <= 1e-6)
    throw ValidationError(
        "squid_effective_ej: phi_ext within 1e-6 of pi/2 (mod pi); effective "
        "inductance diverges");
  return 2.0 * e_js * c;
}

EffectiveSpinParams two_qubit_effective_params(const TwoQubitCircuitParams& p,
                                               const FluxBias& bias) {
  p.validate();
  const double ejs_bar = squid_effective_ej(p.e_js, bias.phi_dc);
  EffectiveSpinParams out;
  out.omega1 = p.e_j1;
  out.omega2 = p.e_j2;
  out.g0 = p.c_c * p.c_c * p.e_j1 * p.e_j2 /
           (4.0 * (p.c1() + p.c_c) * (p.c2() + p.c_c) * ejs_bar);
  out.g1 = out.g0 * std::tan(bias.phi_dc);
  return out;
}

ChargeCouplings full_charge_couplings(const TwoQubitCircuitParams& p) {
  p.validate();
  const double c1 = p.c1();
  const double c2 = p.c2();
  const double cc = p.c_c;
  const double cs = p.c_s;
  ChargeCouplings out;
  out.c_star_cubed = cc * (c1 + c2) * (cs + cc) + cc * cc * cs + c1 * c2 * (2.0 * cc + cs);
  const double c3 = out.c_star_cubed;
  out.c_tilde_j1 = c3 / (c2 * (2.0 * cc + cs) + cc * (cc + cs));
  out.c_tilde_j2 = c3 / (c1 * (2.0 * cc + cs) + cc * (cc + cs));
  out.c_tilde_js = c3 / ((cc + c1) * (cc + c2));
  out.g12 = cc * cc / c3;
  out.g1s = cc * (c2 + cc) / c3;
  out.g2s = cc * (c1 + cc) / c3;
  // Gate-charge numbers in units where 2e = 1.
  out.n_tilde_g1 = -p.c_g1 * p.v_g1 - out.c_tilde_j1 * cc * cc * p.c_g2 / c3 * p.v_g2;
  out.n_tilde_g2 = -p.c_g2 * p.v_g2 - out.c_tilde_j2 * cc * cc * p.c_g1 / c3 * p.v_g1;
  out.n_tilde_gs = -out.c_tilde_js * cc / c3 *
                   (p.c_g1 * (c2 + cc) * p.v_g1 + p.c_g2 * (c1 + cc) * p.v_g2);
  return out;
}

ThreeQubitEffectiveParams three_qubit_effective_params(const ThreeQubitCircuitParams& p,
                                                       const FluxBias& bias1,
                                                       const FluxBias& bias2) {
  p.validate();
  ThreeQubitEffectiveParams out;
  out.omega1 = p.e_j1;
  out.omega2 = p.e_j2;
  const FluxBias* biases[2] = {&bias1, &bias2};
  for (int j = 0; j < 2; ++j) {
    const double ejs_bar = squid_effective_ej(p.e_js, biases[j]->phi_dc);
    const double g0 = p.c_c * p.c_c * p.e_j1 * p.e_j2 /
                      (4.0 * (p.c1() + p.c_c) * (p.c2() + 2.0 * p.c_c) * ejs_bar);
    out.g0_link[j] = g0;
    out.g1_link[j] = g0 * std::tan(biases[j]->phi_dc);
  }
  return out;
}

namespace {

std::vector<std::vector<double>> cpb_levels(const CpbSpectrumRequest& req, int truncation) {
  const int n_states = 2 * truncation + 1;
  // Charge basis |n>, n = -N..N. cos(phi) hops n -> n+-1; sin(phi) does the
  // same with an antisymmetric imaginary amplitude.
  Eigen::MatrixXcd cos_phi = Eigen::MatrixXcd::Zero(n_states, n_states);
  Eigen::MatrixXcd sin_phi = Eigen::MatrixXcd::Zero(n_states, n_states);
  for (int i = 0; i + 1 < n_states; ++i) {
    cos_phi(i, i + 1) = 0.5;
    cos_phi(i + 1, i) = 0.5;
    sin_phi(i, i + 1) = Complex(0.0, -0.5);
    sin_phi(i + 1, i) = Complex(0.0, 0.5);
  }
  const Eigen::MatrixXcd sin_sq = sin_phi * sin_phi;

  std::vector<std::vector<double>> out;
  out.reserve(req.n_g_grid.size());
  for (double n_g : req.n_g_grid) {
    Eigen::MatrixXcd h = -req.e_j * cos_phi + req.gamma * sin_sq;
    for (int i = 0; i < n_states; ++i) {
      const double n = i - truncation;
      h(i, i) += 4.0 * req.e_c * (n - n_g) * (n - n_g);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
    if (solver.info() != Eigen::Success)
      throw ValidationError("cpb_spectrum: eigendecomposition failed");
    std::vector<double> levels(static_cast<std::size_t>(req.levels));
    for (int m = 0; m < req.levels; ++m)
      levels[static_cast<std::size_t>(m)] = solver.eigenvalues()[m];
    out.push_back(std::move(levels));
  }
  return out;
}

}  // namespace

std::vector<std::vector<double>> cpb_spectrum(const CpbSpectrumRequest& req) {
  if (req.truncation < 5) throw ValidationError("cpb_spectrum: truncation must be >= 5");
  if (req.levels < 1 || req.levels > 2 * req.truncation)
    throw ValidationError("cpb_spectrum: levels must be in [1, 2*truncation]");

  auto out = cpb_levels(req, req.truncation);

  // Convergence guard: widening the charge window must not move the
  // requested levels.
  const auto refined = cpb_levels(req, req.truncation + 4);
  const double scale = std::max({std::abs(req.e_c), std::abs(req.e_j), std::abs(req.gamma), 1e-300});
  for (std::size_t i = 0; i < out.size(); ++i)
    for (int m = 0; m < req.levels; ++m)
      if (std::abs(out[i][static_cast<std::size_t>(m)] -
                   refined[i][static_cast<std::size_t>(m)]) > 1e-8 * scale)
        throw TruncationError(
            "cpb_spectrum: levels not converged at the requested truncation; increase it");
  return out;
}

double impedance_ratio(const TwoQubitCircuitParams& p, double phi_ext) {
  p.validate();
  const double ejs_eff = squid_effective_ej(p.e_js, phi_ext);
  if (ejs_eff <= 0.0)
    throw ValidationError("impedance_ratio: effective Josephson energy is not positive");
  // Z_s/Z_1 = sqrt[(E_J1 / E_Js_eff) * (C_1 + C_c) / C_s]; (Phi0/2pi)^2 cancels.
  return std::sqrt(p.e_j1 / ejs_eff * (p.c1() + p.c_c) / p.c_s);
}

}  // namespace daqc
