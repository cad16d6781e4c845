#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "daqc/lattice.hpp"
#include "daqc/pauli.hpp"

namespace daqc {

/// Generator sigma_j^a sigma_k^b of one two-local rotation.
struct TwoLocal {
  int j = 0;
  Pauli a = Pauli::X;
  int k = 0;
  Pauli b = Pauli::X;
};

enum class BlockKind {
  TypeA,          // theta-angle multi-pair hopping core
  TypeB,          // pi/4 two-local dressing
  CoulombA,       // Z_{2j-1} Z_{2j} pairs at angle Bt/(4n)
  LocalRotation,  // exp(-i angle sum_j Z_j)
};

/// One analog evolution. The unitary is exp(-i s * angle * G) with G the sum
/// of the (pairwise qubit-disjoint) two-local generators and s = -1 when
/// `dagger` is set. LocalRotation blocks use `sites`/`axis` instead.
struct AnalogBlock {
  BlockKind kind = BlockKind::TypeB;
  std::vector<TwoLocal> pairs;
  double angle = 0.0;
  bool dagger = false;
  std::vector<int> sites;     // LocalRotation only
  Pauli axis = Pauli::Z;      // LocalRotation only

  /// No qubit index may repeat inside one block.
  bool pairs_disjoint() const;
};

/// A conjugation sandwich [pre..., core, post...] in application order; post
/// mirrors pre with daggers flipped. The compiled Hamiltonian contribution
/// is (coeff) * D^dag G D with D the product of the pre blocks.
struct CompiledSandwich {
  std::vector<AnalogBlock> pre;
  AnalogBlock core;
  std::vector<AnalogBlock> post;

  std::vector<AnalogBlock> flatten() const;
};

struct BlockCounts {
  long total = 0;
  long type_a = 0;
  long type_b = 0;
};

struct TimingReport {
  double tau_a_ns = 0.0;
  double tau_b_ns = 0.0;
  double tau_sim_us = 0.0;
};

/// One Trotterized run: the per-step block list applied `steps` times.
struct Schedule {
  LatticeSpec lattice;
  int steps = 1;
  double simulated_at = 0.0;  // dimensionless A*t
  std::vector<AnalogBlock> step_blocks;

  BlockCounts actual_counts() const;
};

/// Line-oriented export, one block per line:
///   step,index,kind,angle_over_pi,pairs(j:a-k:b;...),dagger,phases(link:p1:p2;...)
/// Phases and the pi/4 dressing angle render as exact rationals (e.g. 3/2).
void export_schedule(const Schedule& schedule, std::ostream& os);
std::string schedule_to_string(const Schedule& schedule);

}  // namespace daqc
