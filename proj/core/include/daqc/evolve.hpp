#pragma once

#include <functional>
#include <vector>

#include "daqc/harmonic.hpp"
#include "daqc/pauli.hpp"
#include "daqc/state.hpp"

namespace daqc {

/// Dense Hermitian matrix on 2^N dimensions. The constructor enforces
/// H == H^dagger within 1e-12 relative tolerance.
class HermitianOperator {
 public:
  explicit HermitianOperator(DenseMatrix m);

  static HermitianOperator zero(int n_qubits);
  static HermitianOperator from_terms(int n_qubits, const std::vector<PauliString>& terms);

  Eigen::Index dim() const { return m_.rows(); }
  int n_qubits() const { return n_qubits_; }
  const DenseMatrix& matrix() const { return m_; }

 private:
  int n_qubits_;
  DenseMatrix m_;
};

/// exp(-i H t) |psi> via Hermitian eigendecomposition. Exact at desk scale;
/// norm preserved by construction.
StateVector evolve_static(const HermitianOperator& h, double duration_ns, const StateVector& psi);

/// Eigendecomposition cached once, applied many times.
class StaticPropagator {
 public:
  explicit StaticPropagator(const HermitianOperator& h);

  StateVector apply(double duration_ns, const StateVector& psi) const;
  void apply_in_place(double duration_ns, DenseVector& amps) const;

 private:
  int n_qubits_;
  Eigen::VectorXd eigenvalues_;
  DenseMatrix eigenvectors_;
};

/// Classical fixed-step RK4 integration of i dpsi/dt = H(t) psi from t0 to
/// t1. Requires dt <= (2pi/nu_max)/20 when the Hamiltonian reports a maximal
/// angular frequency. Norm drift is checked against 1e-6 after every step
/// (renormalized when below, StepSizeError when not).
StateVector evolve_harmonic(const TimeDependentHamiltonian& h, double t0_ns, double t1_ns,
                            const StateVector& psi, double dt_ns);

/// Streaming variant: calls `observe(t, psi)` at t0, then after every
/// `stride`-th step, and at t1.
void evolve_harmonic_observed(
    const TimeDependentHamiltonian& h, double t0_ns, double t1_ns, const StateVector& psi,
    double dt_ns, int stride,
    const std::function<void(double, const DenseVector&)>& observe);

/// Exact two-local rotation exp(-i angle sigma_j^a sigma_k^b) as a dense
/// unitary on n qubits: cos(angle) I - i sin(angle) sigma_j^a sigma_k^b.
DenseMatrix two_local_unitary(Pauli axis_j, Pauli axis_k, double angle, int j, int k, int n);

/// In-place exp(-i angle sigma_j^a sigma_k^b) on raw amplitudes; the fast
/// path used by the schedule simulator. Accepts matrix columns via Ref.
void apply_two_local_rotation(Eigen::Ref<DenseVector> amps, int n_qubits, int j, Pauli a, int k,
                              Pauli b, double angle);

/// In-place exp(-i angle sum_{j in sites} sigma_j^axis); axis must be Z (the
/// only local rotation the schedules emit).
void apply_local_rotation(Eigen::Ref<DenseVector> amps, int n_qubits,
                          const std::vector<int>& sites, Pauli axis, double angle);

/// Exact propagator for Hamiltonians that commute with the total excitation
/// number sum_j (Z_j+1)/2 (hopping and on-site terms do). Diagonalizes each
/// fixed-number sector separately, which is far cheaper than one dense
/// eigendecomposition at 12 qubits and agrees with evolve_static to
/// round-off.
class NumberSectorPropagator {
 public:
  NumberSectorPropagator(int n_qubits, const std::vector<PauliString>& terms);

  StateVector apply(double duration_ns, const StateVector& psi) const;
  void apply_in_place(double duration_ns, DenseVector& amps) const;
  /// Batched variant: every column of `states` is propagated at once.
  void apply_to_columns(double duration_ns, DenseMatrix& states) const;

 private:
  struct Sector {
    std::vector<Eigen::Index> indices;
    Eigen::VectorXd eigenvalues;
    DenseMatrix eigenvectors;
  };
  int n_qubits_;
  std::vector<Sector> sectors_;
};

}  // namespace daqc
