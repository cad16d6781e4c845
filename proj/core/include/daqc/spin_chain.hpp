#pragma once

#include <optional>
#include <string>
#include <vector>

#include "daqc/evolve.hpp"
#include "daqc/harmonic.hpp"
#include "daqc/rational_angle.hpp"
#include "daqc/state.hpp"

namespace daqc {

/// Driven chain of charge qubits with alternating frequencies: qubits in odd
/// positions run at omega_odd, even positions at omega_even; link j couples
/// qubits (j, j+1) with static strength g0[j-1] and drive strength g1[j-1].
struct ChainSpec {
  int n_qubits = 0;
  double omega_odd = 0.0;   // rad/ns
  double omega_even = 0.0;  // rad/ns
  std::vector<double> g0;   // per link, rad/ns
  std::vector<double> g1;   // per link, rad/ns

  double omega(int qubit) const { return (qubit % 2 == 1) ? omega_odd : omega_even; }
  double delta() const { return omega_odd - omega_even; }  // exchange resonance
  double mu() const { return omega_odd + omega_even; }     // double-excitation resonance

  /// Warns when the far-off-resonance premise |omega_odd - omega_even| >> g0
  /// is thin (Delta < 20 g0).
  std::optional<std::string> detuning_warning() const;
  void validate() const;
};

/// Per-SQUID AC drive: two tones with dimensionless amplitudes, angular
/// frequencies, and phases held as exact rational multiples of pi. A tone
/// with zero amplitude or zero frequency is absent.
struct DriveSettings {
  int link = 0;  // couples qubits (link, link+1)
  double a1 = 0.0, a2 = 0.0;
  double nu1 = 0.0, nu2 = 0.0;  // rad/ns
  RationalAngle phase1, phase2;

  bool tone1_active() const { return a1 != 0.0 && nu1 != 0.0; }
  bool tone2_active() const { return a2 != 0.0 && nu2 != 0.0; }
};

/// One of the eight reachable two-local interactions: +-sigma_j^a
/// sigma_{j+1}^b with a, b in {X, Y}.
struct TwoLocalTarget {
  int sign = +1;
  Pauli axis_j = Pauli::Y;
  Pauli axis_k = Pauli::Y;
  int link = 1;
};

/// Drive phases (phi1, phi2) that activate the target interaction. The
/// mixed-axis rows depend on the parity of the link index.
std::pair<RationalAngle, RationalAngle> phase_lookup(const TwoLocalTarget& target);

/// Lab-frame Hamiltonian: sum_l (omega_l/2) Z_l + sum_j [g0_j + g1_j
/// phi_AC^(j)(t)] Y_j Y_{j+1}. At most one drive per link.
TimeDependentHamiltonian lab_frame_hamiltonian(const ChainSpec& chain,
                                               const std::vector<DriveSettings>& drives);

/// Per-link coefficients of the four two-local terms in the rotating frame
/// at exact resonance (nu1 = Delta, nu2 = mu).
struct RwaLinkTerms {
  int link = 0;
  double xx = 0.0, xy = 0.0, yx = 0.0, yy = 0.0;  // rad/ns
};

/// Rotating-wave effective Hamiltonian terms. Every drive tone must sit
/// exactly on its resonance (or be absent), otherwise the static form is
/// invalid and a ValidationError is thrown.
std::vector<RwaLinkTerms> rwa_link_terms(const ChainSpec& chain,
                                         const std::vector<DriveSettings>& drives);

/// Same content assembled as a dense static operator.
HermitianOperator rwa_hamiltonian(const ChainSpec& chain,
                                  const std::vector<DriveSettings>& drives);

/// Pauli strings of the RWA Hamiltonian (exact zeros omitted).
std::vector<PauliString> rwa_terms(const ChainSpec& chain,
                                   const std::vector<DriveSettings>& drives);

/// Co-simulates the lab-frame model (RK4) against the RWA model (static
/// eigendecomposition) and reports the trajectories plus the worst
/// basis-population gap. Populations of computational basis states are
/// frame-invariant under the diagonal free Hamiltonian, so they are compared
/// directly.
struct RwaComparison {
  std::vector<double> times_ns;
  // populations[s][o]: sample s, observable o (full model then RWA model)
  std::vector<std::vector<double>> full_populations;
  std::vector<std::vector<double>> rwa_populations;
  double max_deviation = 0.0;
};

RwaComparison rwa_deviation(const ChainSpec& chain, const std::vector<DriveSettings>& drives,
                            double t_max_ns, double dt_ns,
                            const std::vector<std::string>& observables, const StateVector& psi0,
                            bool allow_large = false);

}  // namespace daqc
