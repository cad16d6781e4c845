#pragma once

#include <cmath>
#include <vector>

#include "daqc/pauli.hpp"

namespace daqc {

/// One AC tone: amplitude * cos(angular_frequency * t + phase).
struct HarmonicTone {
  double amplitude = 0.0;          // rad/ns when used in a Hamiltonian term
  double angular_frequency = 0.0;  // rad/ns
  double phase = 0.0;              // rad
};

/// constant + sum_k A_k cos(nu_k t + phi_k)
struct HarmonicCoefficient {
  double constant = 0.0;  // rad/ns
  std::vector<HarmonicTone> tones;

  double operator()(double t) const {
    double v = constant;
    for (const auto& tone : tones)
      v += tone.amplitude * std::cos(tone.angular_frequency * t + tone.phase);
    return v;
  }
};

/// H(t) = sum_i c_i(t) * P_i with unit-coefficient Pauli strings P_i.
/// Real coefficients keep the instantaneous operator Hermitian at every t.
struct TimeDependentHamiltonian {
  int n_qubits = 0;
  std::vector<std::pair<PauliString, HarmonicCoefficient>> terms;
  /// Largest qubit or drive angular frequency present; used for the
  /// integrator step-size ceiling. Zero means "no ceiling known".
  double max_angular_frequency = 0.0;

  void add_term(PauliString p, HarmonicCoefficient c);
};

}  // namespace daqc
