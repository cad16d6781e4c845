#include "daqc/compiler.hpp"

#include <algorithm>
#include <set>

#include "daqc/units.hpp"

namespace daqc {

namespace {

AnalogBlock type_b(std::vector<TwoLocal> pairs, bool dagger) {
  AnalogBlock b;
  b.kind = BlockKind::TypeB;
  b.pairs = std::move(pairs);
  b.angle = kPi / 4.0;
  b.dagger = dagger;
  return b;
}

AnalogBlock type_a(std::vector<TwoLocal> pairs, double theta) {
  AnalogBlock b;
  b.kind = BlockKind::TypeA;
  b.pairs = std::move(pairs);
  b.angle = theta;
  b.dagger = false;
  return b;
}

std::vector<AnalogBlock> mirror(const std::vector<AnalogBlock>& pre) {
  std::vector<AnalogBlock> post(pre.rbegin(), pre.rend());
  for (auto& b : post) b.dagger = !b.dagger;
  return post;
}

CompiledSandwich make_sandwich(std::vector<AnalogBlock> pre, AnalogBlock core) {
  CompiledSandwich s;
  s.post = mirror(pre);
  s.pre = std::move(pre);
  s.core = std::move(core);
  return s;
}

// Hopping-term counts per horizontal dressing-position family: family 1
// covers hops starting on odd columns, family 2 on even ones.
int family_terms(int cols, int family) {
  const int sign = (cols % 2 == 0) ? -1 : 1;  // (-1)^(l+1)
  return family == 1 ? (2 * cols - 1 - sign) / 4 : (2 * cols - 3 + sign) / 4;
}

}  // namespace

bool AnalogBlock::pairs_disjoint() const {
  std::set<int> seen;
  for (const auto& p : pairs) {
    if (!seen.insert(p.j).second || !seen.insert(p.k).second) return false;
  }
  return true;
}

std::vector<AnalogBlock> CompiledSandwich::flatten() const {
  std::vector<AnalogBlock> out = pre;
  out.push_back(core);
  out.insert(out.end(), post.begin(), post.end());
  return out;
}

std::vector<CompiledSandwich> horizontal_sandwiches(const LatticeSpec& spec, double theta) {
  spec.validate();
  if (spec.cols < 2) throw ValidationError("horizontal compilation needs at least two columns");
  const int l = spec.cols;
  const int h = spec.rows;

  std::vector<CompiledSandwich> out;
  // Families in application order: (1,2), (1,3), (2,4), (2,5). The offset i
  // fixes the core's left qubit p = 2kl + 4j - 5 + i and the dressing link
  // p + 1.
  const std::pair<int, int> families[4] = {{1, 2}, {1, 3}, {2, 4}, {2, 5}};
  for (const auto& [n_family, offset] : families) {
    const int m = family_terms(l, n_family);
    if (m == 0) continue;
    std::vector<int> lefts;
    for (int k = 0; k < h; ++k)
      for (int j = 1; j <= m; ++j) lefts.push_back(2 * k * l + 4 * j - 5 + offset);

    // x-direction: [U^x, exp(-i theta sum sigma^x sigma^y), U^x dag]
    std::vector<TwoLocal> dress_x, core_xy;
    for (int p : lefts) {
      dress_x.push_back({p + 1, Pauli::X, p + 2, Pauli::X});
      core_xy.push_back({p, Pauli::X, p + 1, Pauli::Y});
    }
    out.push_back(make_sandwich({type_b(dress_x, false)}, type_a(core_xy, theta)));

    // y-direction: [U^y dag, exp(-i theta sum sigma^y sigma^x), U^y]
    std::vector<TwoLocal> dress_y, core_yx;
    for (int p : lefts) {
      dress_y.push_back({p + 1, Pauli::Y, p + 2, Pauli::Y});
      core_yx.push_back({p, Pauli::Y, p + 1, Pauli::X});
    }
    out.push_back(make_sandwich({type_b(dress_y, true)}, type_a(core_yx, theta)));
  }
  return out;
}

std::vector<CompiledSandwich> vertical_sandwiches(const LatticeSpec& spec, double theta) {
  spec.validate();
  if (spec.cols < 2) throw ValidationError("vertical compilation needs at least two columns");
  const int l = spec.cols;
  const int h = spec.rows;
  const int span = 2 * l + 1;  // qubits touched by one dressed hop
  const int max_start = 2 * l * (h - 1);

  std::vector<CompiledSandwich> out;
  if (h < 2) return out;

  for (int group = 1; group <= span; ++group) {
    std::vector<int> starts;
    for (int p = group; p <= max_start; p += span) starts.push_back(p);
    if (starts.empty()) continue;

    // Two directions per group. Inside-out the dressing is: single U on the
    // core's right link, then l-1 paired U's whose axes alternate away from
    // the single's axis; the outermost pair fixes the end letters of the
    // realized string. The xy-core direction carries an undaggered single,
    // the yx-core one a daggered single; both then square to the -1/2
    // X Z..Z X and -1/2 Y Z..Z Y halves of the hop.
    struct Direction {
      Pauli core_a, core_b, single_axis;
      bool single_dagger;
    };
    const Direction dirs[2] = {
        {Pauli::X, Pauli::Y, Pauli::X, false},
        {Pauli::Y, Pauli::X, Pauli::Y, true},
    };
    for (const auto& dir : dirs) {
      std::vector<AnalogBlock> pre;
      // Paired dressings, outermost (i = 1) first, daggered on the way in.
      for (int i = 1; i <= l - 1; ++i) {
        const bool same_as_single = ((l - 1 - i) % 2 == 1);
        const Pauli axis = same_as_single
                               ? dir.single_axis
                               : (dir.single_axis == Pauli::X ? Pauli::Y : Pauli::X);
        std::vector<TwoLocal> pairs;
        for (int p : starts) {
          pairs.push_back({p + i - 1, axis, p + i, axis});
          pairs.push_back({p + 2 * l - i, axis, p + 2 * l - i + 1, axis});
        }
        pre.push_back(type_b(std::move(pairs), true));  // daggered on the way in
      }
      std::vector<TwoLocal> single_pairs, core_pairs;
      for (int p : starts) {
        single_pairs.push_back({p + l, dir.single_axis, p + l + 1, dir.single_axis});
        core_pairs.push_back({p + l - 1, dir.core_a, p + l, dir.core_b});
      }
      pre.push_back(type_b(std::move(single_pairs), dir.single_dagger));
      out.push_back(make_sandwich(std::move(pre), type_a(core_pairs, theta)));
    }
  }
  return out;
}

std::vector<AnalogBlock> compile_horizontal(const LatticeSpec& spec, double theta) {
  std::vector<AnalogBlock> out;
  for (const auto& s : horizontal_sandwiches(spec, theta)) {
    auto flat = s.flatten();
    out.insert(out.end(), flat.begin(), flat.end());
  }
  return out;
}

std::vector<AnalogBlock> compile_vertical(const LatticeSpec& spec, double theta) {
  std::vector<AnalogBlock> out;
  for (const auto& s : vertical_sandwiches(spec, theta)) {
    auto flat = s.flatten();
    out.insert(out.end(), flat.begin(), flat.end());
  }
  return out;
}

std::vector<AnalogBlock> compile_coulomb(const LatticeSpec& spec, double theta_b) {
  spec.validate();
  std::vector<AnalogBlock> out;
  if (spec.b == 0.0) return out;

  AnalogBlock zz;
  zz.kind = BlockKind::CoulombA;
  zz.angle = theta_b;
  for (int site = 1; site <= spec.n_sites(); ++site)
    zz.pairs.push_back({2 * site - 1, Pauli::Z, 2 * site, Pauli::Z});
  out.push_back(std::move(zz));

  AnalogBlock rot;
  rot.kind = BlockKind::LocalRotation;
  rot.axis = Pauli::Z;
  rot.angle = theta_b;
  for (int q = 1; q <= spec.n_qubits(); ++q) rot.sites.push_back(q);
  out.push_back(std::move(rot));
  return out;
}

Schedule compile_schedule(const LatticeSpec& spec, double t_ns, int n_steps) {
  spec.validate();
  if (spec.cols < 2)
    throw ValidationError("compile_schedule: need at least two columns");
  if (n_steps < 1) throw ValidationError("compile_schedule: need at least one Trotter step");

  const double theta = spec.a * t_ns / (2.0 * n_steps);
  Schedule schedule;
  schedule.lattice = spec;
  schedule.steps = n_steps;
  schedule.simulated_at = spec.a * t_ns;

  auto hori = compile_horizontal(spec, theta);
  auto verti = compile_vertical(spec, theta);
  schedule.step_blocks = std::move(hori);
  schedule.step_blocks.insert(schedule.step_blocks.end(), verti.begin(), verti.end());
  if (spec.include_coulomb) {
    auto coul = compile_coulomb(spec, spec.b * t_ns / (4.0 * n_steps));
    schedule.step_blocks.insert(schedule.step_blocks.end(), coul.begin(), coul.end());
  }

  for (const auto& block : schedule.step_blocks)
    if (!block.pairs_disjoint())
      throw ValidationError("compile_schedule: non-disjoint pairs inside an analog block");
  return schedule;
}

BlockCounts block_count(int cols) {
  if (cols < 2) throw ValidationError("block_count: need at least two columns");
  BlockCounts counts;
  if (cols == 2) {
    counts.total = 62;
    counts.type_a = 4 * cols + 6;             // 14
    counts.type_b = 8 * cols * cols + 4 * cols + 8;  // 48
  } else {
    const long span = 2L * cols + 1;
    counts.total = 2 * span * span + 24;
    counts.type_a = 4L * cols + 10;
    counts.type_b = 8L * cols * cols + 4L * cols + 16;
  }
  return counts;
}

TimingReport timing(int cols, double at, int n_steps, double ag1_rad_per_ns) {
  if (ag1_rad_per_ns <= 0.0) throw ValidationError("timing: A*g1 must be positive");
  if (n_steps < 1) throw ValidationError("timing: need at least one Trotter step");
  const auto counts = block_count(cols);
  TimingReport report;
  report.tau_a_ns = at / (ag1_rad_per_ns * n_steps);
  report.tau_b_ns = kPi / (2.0 * ag1_rad_per_ns);
  report.tau_sim_us =
      (counts.type_a * report.tau_a_ns + counts.type_b * report.tau_b_ns) / 1000.0;
  return report;
}

void apply_block_in_place(const AnalogBlock& block, int n_qubits,
                          Eigen::Ref<DenseVector> amps) {
  const double angle = block.dagger ? -block.angle : block.angle;
  switch (block.kind) {
    case BlockKind::TypeA:
    case BlockKind::TypeB:
    case BlockKind::CoulombA:
      for (const auto& p : block.pairs)
        apply_two_local_rotation(amps, n_qubits, p.j, p.a, p.k, p.b, angle);
      break;
    case BlockKind::LocalRotation:
      apply_local_rotation(amps, n_qubits, block.sites, block.axis, angle);
      break;
  }
}

StateVector simulate_schedule(const Schedule& schedule, const StateVector& psi0) {
  schedule.lattice.simulation_guard();
  if (psi0.n_qubits() != schedule.lattice.n_qubits())
    throw ValidationError("simulate_schedule: state size mismatch");
  DenseVector amps = psi0.amplitudes();
  apply_schedule_in_place(schedule, amps);
  StateVector out(psi0.n_qubits(), std::move(amps));
  out.normalize();
  return out;
}

void apply_schedule_in_place(const Schedule& schedule, Eigen::Ref<DenseVector> amps) {
  const int n = schedule.lattice.n_qubits();
  for (int step = 0; step < schedule.steps; ++step)
    for (const auto& block : schedule.step_blocks) apply_block_in_place(block, n, amps);
}

BlockCounts Schedule::actual_counts() const {
  BlockCounts counts;
  for (const auto& block : step_blocks) {
    ++counts.total;
    if (block.kind == BlockKind::TypeA) ++counts.type_a;
    if (block.kind == BlockKind::TypeB) ++counts.type_b;
  }
  return counts;
}

std::vector<DriveSettings> drive_settings_for(const AnalogBlock& block, const ChainSpec* chain) {
  if (block.kind != BlockKind::TypeA && block.kind != BlockKind::TypeB)
    throw ValidationError("drive_settings_for: only type-a/type-b blocks are drive-realized");
  std::vector<DriveSettings> out;
  for (const auto& p : block.pairs) {
    if (p.k != p.j + 1)
      throw ValidationError(
          "drive_settings_for: compilation invariant violated (non-adjacent pair)");
    TwoLocalTarget target;
    target.link = p.j;
    target.axis_j = p.a;
    target.axis_k = p.b;
    target.sign = (block.kind == BlockKind::TypeB && block.dagger) ? -1 : +1;
    const auto [phi1, phi2] = phase_lookup(target);
    DriveSettings d;
    d.link = p.j;
    d.a1 = d.a2 = 1.0;
    d.phase1 = phi1;
    d.phase2 = phi2;
    if (chain != nullptr) {
      d.nu1 = chain->delta();
      d.nu2 = chain->mu();
    }
    out.push_back(d);
  }
  return out;
}

PauliString conjugate_by_block(const PauliString& p, const AnalogBlock& block) {
  if (block.kind == BlockKind::LocalRotation)
    throw ValidationError("conjugate_by_block: local rotations are not pi/4 two-local blocks");
  PauliString out = p;
  const Complex factor = block.dagger ? Complex(0.0, 1.0) : Complex(0.0, -1.0);
  for (const auto& pair : block.pairs) {
    const auto generator = PauliString::two(p.n_qubits(), pair.j, pair.a, pair.k, pair.b);
    if (out.commutes_with(generator)) continue;
    out = out * generator;
    out.set_coefficient(out.coefficient() * factor);
  }
  return out;
}

PauliTermMap reconstruct_hopping_terms(const LatticeSpec& spec) {
  const int n = spec.n_qubits();
  auto sandwiches = horizontal_sandwiches(spec, 0.0);
  auto verti = vertical_sandwiches(spec, 0.0);
  sandwiches.insert(sandwiches.end(), verti.begin(), verti.end());

  PauliTermMap terms;
  for (const auto& s : sandwiches) {
    for (const auto& core_pair : s.core.pairs) {
      PauliString g =
          PauliString::two(n, core_pair.j, core_pair.a, core_pair.k, core_pair.b, spec.a / 2.0);
      // D^dag G D with D the product of the pre blocks in application
      // order; conjugate by the innermost (last applied) block first.
      for (auto it = s.pre.rbegin(); it != s.pre.rend(); ++it) g = conjugate_by_block(g, *it);
      accumulate_term(terms, g);
    }
  }
  return terms;
}

}  // namespace daqc
