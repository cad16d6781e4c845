#pragma once

#include <utility>
#include <vector>

#include "daqc/evolve.hpp"
#include "daqc/pauli.hpp"

namespace daqc {

enum class Spin { Up, Down };

/// l x h Hubbard lattice (l columns, h rows, l <= h) with hopping amplitude
/// `a` and on-site amplitude `b`, both rad/ns. Maps to a 2lh-qubit chain.
struct LatticeSpec {
  int cols = 0;            // l
  int rows = 0;            // h
  double a = 1.0;          // hopping
  double b = 0.0;          // on-site
  bool include_coulomb = false;

  int n_sites() const { return cols * rows; }
  int n_qubits() const { return 2 * cols * rows; }

  /// Counting and compilation accept any l <= h; simulation additionally
  /// guards n_qubits <= 14.
  void validate() const;
  void simulation_guard() const;
};

/// Chain position of a lattice site: fermion site j = k*l + c maps to chain
/// 2j-1 (spin up) or 2j (spin down). Row k is 0-based, column c is 1-based.
int spinless_index(const LatticeSpec& spec, int row, int col, Spin spin);

/// All hopping pairs (j, k) with j < k in chain indices: horizontal
/// neighbors stride 2 inside a row, vertical neighbors stride 2l across
/// rows. Every pair has k - j even.
std::vector<std::pair<int, int>> hopping_pairs(const LatticeSpec& spec);

/// The two Pauli strings -1/2 X_j Z..Z X_k and -1/2 Y_j Z..Z Y_k whose sum
/// equals b_j^dag b_k + b_k^dag b_j under the Jordan-Wigner convention used
/// here (occupied = z=+1). Requires k > j with k - j even.
std::pair<PauliString, PauliString> jw_hopping_string(int j, int k, int n_qubits);

/// Pauli terms of the full lattice Hamiltonian (hopping scaled by `a`; the
/// on-site part (b/4) sum (Z+1)(Z+1) included when the flag is set).
std::vector<PauliString> hubbard_spin_terms(const LatticeSpec& spec);

/// Dense realization; simulation sizes only.
HermitianOperator hubbard_spin_hamiltonian(const LatticeSpec& spec);

}  // namespace daqc
