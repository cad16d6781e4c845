#pragma once

#include <string>
#include <vector>

#include "daqc/pauli.hpp"

namespace daqc {

/// 2^N complex amplitudes with unit Euclidean norm.
///
/// Basis labels read qubit 1 first; character '1' marks an excited/occupied
/// qubit (z = +1 eigenstate), '0' a ground/empty one. Index bit convention
/// matches PauliString::dense: qubit 1 is the most significant bit and bit
/// value 0 corresponds to z = +1.
class StateVector {
 public:
  StateVector(int n_qubits, DenseVector amplitudes);

  /// |label>, e.g. basis_state("010") on three qubits.
  static StateVector basis_state(const std::string& label);
  /// Basis state with the given set of excited qubits (1-based).
  static StateVector from_excited(int n_qubits, const std::vector<int>& excited_qubits);
  /// All qubits ground/empty.
  static StateVector vacuum(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  Eigen::Index dim() const { return amps_.size(); }
  const DenseVector& amplitudes() const { return amps_; }
  DenseVector& amplitudes() { return amps_; }

  double norm() const { return amps_.norm(); }
  void normalize() { amps_ /= amps_.norm(); }

  /// Population |<label|psi>|^2 of a computational basis state.
  double population(const std::string& label) const;

  /// Expectation of the excitation number sum_j (Z_j + 1)/2.
  double excitation_number() const;

  /// Amplitude index of a basis label (helper shared by the parsers).
  static Eigen::Index basis_index(const std::string& label);

 private:
  int n_qubits_;
  DenseVector amps_;
};

/// |<a|b>|^2; requires equal qubit counts.
double fidelity(const StateVector& a, const StateVector& b);

}  // namespace daqc
