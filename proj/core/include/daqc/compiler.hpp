#pragma once

#include <optional>
#include <vector>

#include "daqc/schedule.hpp"
#include "daqc/spin_chain.hpp"
#include "daqc/state.hpp"

namespace daqc {

/// Horizontal-hopping sandwiches for one Trotter step at core angle theta =
/// A*t/(2n): four dressing-position families, two directions each, fused
/// across rows. The two families that are empty at l = 2 are skipped, which
/// reproduces the 12-block horizontal count there.
std::vector<CompiledSandwich> horizontal_sandwiches(const LatticeSpec& spec, double theta);

/// Vertical-hopping sandwiches: hops grouped by start position mod (2l+1)
/// so that every span in a group is qubit-disjoint; each group compiles to
/// (l-1) paired dressings + 1 single dressing + 1 core per direction.
std::vector<CompiledSandwich> vertical_sandwiches(const LatticeSpec& spec, double theta);

/// Flat block lists in application order.
std::vector<AnalogBlock> compile_horizontal(const LatticeSpec& spec, double theta);
std::vector<AnalogBlock> compile_vertical(const LatticeSpec& spec, double theta);

/// On-site factor: one CoulombA block over all (2j-1, 2j) pairs at angle
/// theta_b = B*t/(4n) plus one z local-rotation block for the linear part.
/// Empty when the amplitude is zero.
std::vector<AnalogBlock> compile_coulomb(const LatticeSpec& spec, double theta_b);

/// Full Trotterized schedule for simulated time t with n steps.
Schedule compile_schedule(const LatticeSpec& spec, double t_ns, int n_steps);

/// Closed-form block counts per Trotter step (hopping only). The formulas
/// assume h >= 3; at h = 2 one vertical group is empty and the emitted
/// schedule is smaller (see Schedule::actual_counts).
BlockCounts block_count(int cols);

/// Gate times tau_a = A*t/(A*g1*n) and tau_b = pi/(2*A*g1), plus the
/// per-step total over the block-count split.
TimingReport timing(int cols, double at, int n_steps, double ag1_rad_per_ns);

/// Applies every block's exact unitary in order, `steps` times.
StateVector simulate_schedule(const Schedule& schedule, const StateVector& psi0);
/// In-place fast path on raw amplitudes (accepts matrix columns).
void apply_schedule_in_place(const Schedule& schedule, Eigen::Ref<DenseVector> amps);
void apply_block_in_place(const AnalogBlock& block, int n_qubits, Eigen::Ref<DenseVector> amps);

/// Hardware-facing drive rows for a TypeA/TypeB block: one per active link,
/// with phases from the interaction table and resonant frequencies filled
/// from the chain when given.
std::vector<DriveSettings> drive_settings_for(const AnalogBlock& block,
                                              const ChainSpec* chain = nullptr);

/// Symbolic reconstruction sum_groups (A/2) D^dag G D of the hopping
/// Hamiltonian from the compiled sandwiches; oracle target for the
/// compiled-vs-direct equivalence check.
PauliTermMap reconstruct_hopping_terms(const LatticeSpec& spec);

/// Conjugates a Pauli string by one block's unitary: P -> B^dag P B.
/// Exact (pi/4 two-local rotations are Clifford on strings).
PauliString conjugate_by_block(const PauliString& p, const AnalogBlock& block);

}  // namespace daqc
