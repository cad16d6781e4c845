#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "daqc/circuit.hpp"
#include "daqc/compiler.hpp"
#include "daqc/lattice.hpp"
#include "daqc/random.hpp"
#include "daqc/spin_chain.hpp"

namespace daqc {

/// Initial-state specification string:
///   "up@1,1;down@2,2"  occupation list (1-based row,col)
///   "ghz-pair"         (|all occupied> + |vacuum>)/sqrt(2)
///   "random(42)"       seeded Haar-random state
struct InitialStateSpec {
  enum class Kind { Occupations, GhzPair, Random };
  Kind kind = Kind::Occupations;
  struct Occupation {
    int row = 1;  // 1-based here; converted at realization
    int col = 1;
    Spin spin = Spin::Up;
  };
  std::vector<Occupation> occupations;
  std::uint64_t seed = 0;

  static InitialStateSpec parse(const std::string& text);
  StateVector realize(const LatticeSpec& lattice) const;
  std::string describe() const;
};

/// Exact hopping propagator with the eigendecomposition cached; exploits
/// that hopping (and the on-site term) conserve the excitation number.
class HoppingPropagator {
 public:
  explicit HoppingPropagator(const LatticeSpec& lattice);
  StateVector apply(double t_ns, const StateVector& psi0) const;
  void apply_to_columns(double t_ns, DenseMatrix& states) const;

 private:
  NumberSectorPropagator propagator_;
};

/// evolve_static of the lattice Hamiltonian (hopping-only unless the spec
/// enables the on-site term).
StateVector exact_hopping_evolution(const LatticeSpec& lattice, double t_ns,
                                    const StateVector& psi0);

struct FidelityRow {
  double at = 0.0;
  int n = 0;
  double fidelity = 0.0;
};

struct FidelitySummary {
  int n = 0;
  int samples = 0;
  double mean = 0.0;
  double stddev = 0.0;
};

struct FidelityReport {
  std::vector<FidelityRow> rows;
  std::vector<FidelitySummary> summaries;
};

struct ExperimentConfig {
  LatticeSpec lattice{2, 3, 1.0, 0.0, false};
  std::vector<int> steps{10, 20, 30};
  double at = 4.0;
  int at_samples = 81;  // uniform over [0, at]
  std::uint64_t seed = 1;
  int samples = 1000;  // random-state count for the mean-fidelity benchmark
  InitialStateSpec initial;
};

/// Fidelity exact-vs-DAQC over a sweep of simulated times for one initial
/// state, per Trotter-step count.
FidelityReport fidelity_experiment(const ExperimentConfig& cfg);

/// Mean/stddev endpoint fidelity over seeded Haar-random initial states.
FidelityReport mean_fidelity_experiment(const ExperimentConfig& cfg);

std::string fidelity_rows_csv(const FidelityReport& report);
std::string fidelity_summary_csv(const FidelityReport& report);

/// Gate/step timing table; times render with 3 decimals.
std::string timing_table_csv(const std::vector<int>& cols_list, double at,
                             const std::vector<int>& steps_list, double ag1_rad_per_ns);

/// Named driven-chain scenarios validating the rotating-wave reduction.
struct RwaScenario {
  std::string name;          // two-qubit | three-qubit | exchange | double-excitation
  ChainSpec chain;
  std::vector<DriveSettings> drives;
  std::vector<std::string> observables;
  std::string initial_label;
  double t_max_ns = 12.5;
  double dt_ns = 0.00025;
};

RwaScenario rwa_scenario(const std::string& name);

struct RwaReport {
  RwaScenario scenario;
  RwaComparison comparison;
  std::string csv;  // t_ns,p_full_<label>...,p_rwa_<label>...
};

RwaReport rwa_report(const RwaScenario& scenario);

/// CPB spectrum sweep: columns n_g,E0,..; with `transitions` the columns are
/// the gaps E_n - E_0 instead.
std::string spectrum_csv(const CpbSpectrumRequest& req, bool transitions);

/// Impedance-ratio sweep: columns phi_ext,ratio.
std::string impedance_csv(const TwoQubitCircuitParams& params, const std::vector<double>& phi_grid);

/// Shared float rendering: 12 significant digits, C locale.
std::string format_g12(double v);
/// Fixed 3 decimals (timing columns).
std::string format_f3(double v);

}  // namespace daqc
