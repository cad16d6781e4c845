#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "daqc/errors.hpp"
#include "daqc/rational_angle.hpp"

namespace daqc {

/// Raw constants of the two-charge-qubit + grounded-SQUID circuit.
/// Capacitances in fF, Josephson energies in rad/ns, gate voltages in
/// arbitrary but consistent units (the gate-charge outputs inherit them).
struct TwoQubitCircuitParams {
  double c_g1 = 0.0, c_g2 = 0.0;  // gate capacitances
  double c_j1 = 0.0, c_j2 = 0.0;  // Josephson capacitances
  double c_c = 0.0;               // coupling capacitance
  double c_s = 0.0;               // SQUID capacitance
  double e_j1 = 0.0, e_j2 = 0.0;  // qubit Josephson energies
  double e_js = 0.0;              // single-junction SQUID Josephson energy
  double v_g1 = 0.0, v_g2 = 0.0;  // gate voltages

  double c1() const { return c_g1 + c_j1; }
  double c2() const { return c_g2 + c_j2; }

  void validate() const;
};

/// Three-qubit chain; the third CPB repeats the first and both SQUIDs share
/// e_js and c_s.
struct ThreeQubitCircuitParams {
  double c_g1 = 0.0, c_g2 = 0.0;
  double c_j1 = 0.0, c_j2 = 0.0;
  double c_c = 0.0;
  double c_s = 0.0;
  double e_j1 = 0.0, e_j2 = 0.0;
  double e_js = 0.0;
  double v_g1 = 0.0, v_g2 = 0.0;

  double c1() const { return c_g1 + c_j1; }
  double c2() const { return c_g2 + c_j2; }

  void validate() const;
};

/// External flux through a SQUID: DC bias plus up to two small AC tones.
/// Amplitudes are dimensionless flux amplitudes; phases are exact rational
/// multiples of pi.
struct FluxBias {
  double phi_dc = 0.0;  // rad
  double a1 = 0.0, a2 = 0.0;
  double nu1 = 0.0, nu2 = 0.0;  // rad/ns
  RationalAngle phase1, phase2;

  /// Returns a warning when an AC amplitude violates A <= 0.1 |phi_DC|.
  std::optional<std::string> smallness_warning() const;
};

/// Effective two-level parameters: qubit frequencies and static/drive
/// coupling strengths, all rad/ns. g1/g0 equals tan(phi_DC) structurally.
struct EffectiveSpinParams {
  double omega1 = 0.0;
  double omega2 = 0.0;
  double g0 = 0.0;
  double g1 = 0.0;
};

/// Inputs for a charge-basis CPB diagonalization:
/// 4 E_C (n - n_g)^2 - E_J cos(phi) + gamma sin(phi)^2.
struct CpbSpectrumRequest {
  double e_c = 0.0;    // rad/ns
  double e_j = 0.0;    // rad/ns
  double gamma = 0.0;  // rad/ns
  std::vector<double> n_g_grid;
  int truncation = 10;  // charge states |-N..N|
  int levels = 4;
};

/// 2 E_Js cos(phi_ext); throws near the divergence at phi_ext = pi/2 mod pi.
double squid_effective_ej(double e_js, double phi_ext);

/// Effective spin parameters of the two-qubit circuit under a DC flux bias.
EffectiveSpinParams two_qubit_effective_params(const TwoQubitCircuitParams& p,
                                               const FluxBias& bias);

/// Full charge-basis couplings of the exact circuit Hamiltonian.
struct ChargeCouplings {
  double c_tilde_j1 = 0.0, c_tilde_j2 = 0.0, c_tilde_js = 0.0;
  double n_tilde_g1 = 0.0, n_tilde_g2 = 0.0, n_tilde_gs = 0.0;
  double g12 = 0.0, g1s = 0.0, g2s = 0.0;
  double c_star_cubed = 0.0;
};
ChargeCouplings full_charge_couplings(const TwoQubitCircuitParams& p);

/// Per-SQUID {g0, g1} plus the shared qubit frequencies.
struct ThreeQubitEffectiveParams {
  double omega1 = 0.0;
  double omega2 = 0.0;
  double g0_link[2] = {0.0, 0.0};
  double g1_link[2] = {0.0, 0.0};
};
ThreeQubitEffectiveParams three_qubit_effective_params(const ThreeQubitCircuitParams& p,
                                                       const FluxBias& bias1,
                                                       const FluxBias& bias2);

/// Sorted eigenvalues (lowest `levels`) for every n_g grid point.
std::vector<std::vector<double>> cpb_spectrum(const CpbSpectrumRequest& req);

/// Z_s / Z_1 with Z = sqrt(L_J/C), L_J = (Phi0/2pi)^2 / E_J. The flux
/// quantum cancels in the ratio. Qualitative-only output; the source figure
/// never states its formula.
double impedance_ratio(const TwoQubitCircuitParams& p, double phi_ext);

}  // namespace daqc
