#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "daqc/errors.hpp"

namespace daqc {

using Complex = std::complex<double>;
using DenseMatrix = Eigen::MatrixXcd;
using DenseVector = Eigen::VectorXcd;

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_char(Pauli p);
Pauli pauli_from_char(char c);

/// Hard ceiling on dense realizations (2^14 = 16384 amplitudes).
inline constexpr int kMaxDenseQubits = 14;

/// A tensor product of single-qubit Pauli letters with a complex coefficient.
///
/// Qubits are numbered 1..n. In dense realizations qubit 1 is the most
/// significant bit, so the single-qubit Z renders as diag(1, -1) and basis
/// index 0 is the all-|z=+1> state.
class PauliString {
 public:
  PauliString(int n_qubits, std::vector<Pauli> letters, Complex coefficient = 1.0);

  /// Identity string times `coefficient`.
  static PauliString identity(int n_qubits, Complex coefficient = 1.0);
  /// Single nontrivial letter at `site` (1-based).
  static PauliString single(int n_qubits, int site, Pauli p, Complex coefficient = 1.0);
  /// Two letters at `site_a` < or > `site_b` (distinct, 1-based).
  static PauliString two(int n_qubits, int site_a, Pauli a, int site_b, Pauli b,
                         Complex coefficient = 1.0);
  /// Letters from a string like "XZY" ('I','X','Y','Z'), qubit 1 first.
  static PauliString from_label(const std::string& label, Complex coefficient = 1.0);

  int n_qubits() const { return n_qubits_; }
  Pauli letter(int site) const { return letters_[static_cast<std::size_t>(site - 1)]; }
  const std::vector<Pauli>& letters() const { return letters_; }
  Complex coefficient() const { return coefficient_; }
  void set_coefficient(Complex c) { coefficient_ = c; }

  std::string label() const;

  /// Weight = number of non-identity letters.
  int weight() const;

  /// Product of two strings is again a string; the phase lands in the
  /// coefficient. Exact (coefficients stay in {1, i, -1, -i} times inputs).
  PauliString operator*(const PauliString& rhs) const;

  bool commutes_with(const PauliString& rhs) const;

  /// Dense 2^n x 2^n realization (Kronecker products, coefficient folded in).
  DenseMatrix dense() const;

  /// y += coefficient * (P x). One pass over the amplitudes.
  void apply_add(const DenseVector& x, DenseVector& y) const;

 private:
  int n_qubits_;
  std::vector<Pauli> letters_;
  Complex coefficient_;
};

/// A sum of Pauli strings collected into a canonical map label -> coefficient.
/// Used by oracles that compare operators term by term.
using PauliTermMap = std::map<std::string, Complex>;

void accumulate_term(PauliTermMap& terms, const PauliString& p);
/// Max |coefficient| difference between two collected sums.
double term_map_distance(const PauliTermMap& a, const PauliTermMap& b);

/// Dense realization of a sum of strings.
DenseMatrix dense_sum(int n_qubits, const std::vector<PauliString>& terms);

}  // namespace daqc
