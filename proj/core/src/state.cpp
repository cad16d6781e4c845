#include "daqc/state.hpp"

namespace daqc {

StateVector::StateVector(int n_qubits, DenseVector amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
  if (n_qubits_ < 1) throw ValidationError("StateVector: need at least one qubit");
  if (n_qubits_ > kMaxDenseQubits)
    throw ResourceError("StateVector: dimension guard exceeded (n > 14)");
  if (amps_.size() != (static_cast<Eigen::Index>(1) << n_qubits_))
    throw ValidationError("StateVector: amplitude count must be 2^n");
  if (std::abs(amps_.norm() - 1.0) > 1e-9)
    throw ValidationError("StateVector: norm must be 1 within 1e-9");
}

Eigen::Index StateVector::basis_index(const std::string& label) {
  Eigen::Index idx = 0;
  for (char c : label) {
    if (c != '0' && c != '1') throw ValidationError("basis label must be over {0,1}");
    // '1' = excited = z=+1 = bit 0.
    idx = (idx << 1) | (c == '0' ? 1 : 0);
  }
  return idx;
}

StateVector StateVector::basis_state(const std::string& label) {
  const int n = static_cast<int>(label.size());
  if (n < 1) throw ValidationError("basis label is empty");
  DenseVector amps = DenseVector::Zero(static_cast<Eigen::Index>(1) << n);
  amps[basis_index(label)] = 1.0;
  return StateVector(n, std::move(amps));
}

StateVector StateVector::from_excited(int n_qubits, const std::vector<int>& excited_qubits) {
  std::string label(static_cast<std::size_t>(n_qubits), '0');
  for (int q : excited_qubits) {
    if (q < 1 || q > n_qubits) throw ValidationError("excited qubit index out of range");
    label[static_cast<std::size_t>(q - 1)] = '1';
  }
  return basis_state(label);
}

StateVector StateVector::vacuum(int n_qubits) { return from_excited(n_qubits, {}); }

double StateVector::population(const std::string& label) const {
  if (static_cast<int>(label.size()) != n_qubits_)
    throw ValidationError("population: label length mismatch");
  return std::norm(amps_[basis_index(label)]);
}

double StateVector::excitation_number() const {
  double total = 0.0;
  for (Eigen::Index i = 0; i < amps_.size(); ++i) {
    const int excited = n_qubits_ - __builtin_popcountll(static_cast<std::uint64_t>(i));
    total += excited * std::norm(amps_[i]);
  }
  return total;
}

double fidelity(const StateVector& a, const StateVector& b) {
  if (a.n_qubits() != b.n_qubits()) throw ValidationError("fidelity: qubit count mismatch");
  return std::norm(a.amplitudes().dot(b.amplitudes()));
}

}  // namespace daqc
