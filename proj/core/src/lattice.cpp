#include "daqc/lattice.hpp"

#include <string>

namespace daqc {

void LatticeSpec::validate() const {
  if (cols < 1 || rows < 1) throw ValidationError("LatticeSpec: need at least one site");
  if (cols > rows)
    throw ValidationError("LatticeSpec: columns must not exceed rows (l <= h)");
}

void LatticeSpec::simulation_guard() const {
  validate();
  if (n_qubits() > kMaxDenseQubits)
    throw ResourceError("lattice simulation guard: 2*l*h must be <= 14 (got " +
                        std::to_string(n_qubits()) + " qubits)");
}

int spinless_index(const LatticeSpec& spec, int row, int col, Spin spin) {
  spec.validate();
  if (row < 0 || row >= spec.rows) throw ValidationError("spinless_index: row out of range");
  if (col < 1 || col > spec.cols) throw ValidationError("spinless_index: column out of range");
  const int site = row * spec.cols + col;
  return spin == Spin::Up ? 2 * site - 1 : 2 * site;
}

std::vector<std::pair<int, int>> hopping_pairs(const LatticeSpec& spec) {
  spec.validate();
  const int l = spec.cols;
  const int h = spec.rows;
  std::vector<std::pair<int, int>> pairs;
  for (int k = 0; k < h; ++k) {
    for (int j = 1; j <= l - 1; ++j) {
      pairs.emplace_back(2 * k * l + 2 * j - 1, 2 * k * l + 2 * j + 1);  // spin up
      pairs.emplace_back(2 * k * l + 2 * j, 2 * k * l + 2 * (j + 1));    // spin down
    }
  }
  for (int k = 0; k + 1 < h; ++k)
    for (int j = 1; j <= 2 * l; ++j)
      pairs.emplace_back(2 * k * l + j, 2 * (k + 1) * l + j);
  return pairs;
}

std::pair<PauliString, PauliString> jw_hopping_string(int j, int k, int n_qubits) {
  if (k <= j) throw ValidationError("jw_hopping_string: need k > j");
  if ((k - j) % 2 != 0)
    throw ValidationError(
        "jw_hopping_string: k - j must be even (odd separations change the sign convention)");
  if (k > n_qubits || j < 1) throw ValidationError("jw_hopping_string: site out of range");

  std::vector<Pauli> x_letters(static_cast<std::size_t>(n_qubits), Pauli::I);
  std::vector<Pauli> y_letters(static_cast<std::size_t>(n_qubits), Pauli::I);
  x_letters[static_cast<std::size_t>(j - 1)] = Pauli::X;
  x_letters[static_cast<std::size_t>(k - 1)] = Pauli::X;
  y_letters[static_cast<std::size_t>(j - 1)] = Pauli::Y;
  y_letters[static_cast<std::size_t>(k - 1)] = Pauli::Y;
  for (int l = j + 1; l < k; ++l) {
    x_letters[static_cast<std::size_t>(l - 1)] = Pauli::Z;
    y_letters[static_cast<std::size_t>(l - 1)] = Pauli::Z;
  }
  return {PauliString(n_qubits, std::move(x_letters), -0.5),
          PauliString(n_qubits, std::move(y_letters), -0.5)};
}

std::vector<PauliString> hubbard_spin_terms(const LatticeSpec& spec) {
  spec.validate();
  const int n = spec.n_qubits();
  std::vector<PauliString> terms;
  for (const auto& [j, k] : hopping_pairs(spec)) {
    auto [xzx, yzy] = jw_hopping_string(j, k, n);
    xzx.set_coefficient(xzx.coefficient() * spec.a);
    yzy.set_coefficient(yzy.coefficient() * spec.a);
    terms.push_back(std::move(xzx));
    terms.push_back(std::move(yzy));
  }
  if (spec.include_coulomb && spec.b != 0.0) {
    const double quarter = spec.b / 4.0;
    for (int site = 1; site <= spec.n_sites(); ++site) {
      const int up = 2 * site - 1;
      const int down = 2 * site;
      terms.push_back(PauliString::two(n, up, Pauli::Z, down, Pauli::Z, quarter));
      terms.push_back(PauliString::single(n, up, Pauli::Z, quarter));
      terms.push_back(PauliString::single(n, down, Pauli::Z, quarter));
      terms.push_back(PauliString::identity(n, quarter));
    }
  }
  return terms;
}

HermitianOperator hubbard_spin_hamiltonian(const LatticeSpec& spec) {
  spec.simulation_guard();
  return HermitianOperator::from_terms(spec.n_qubits(), hubbard_spin_terms(spec));
}

}  // namespace daqc
