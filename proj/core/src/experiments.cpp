#include "daqc/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <functional>
#include <sstream>
#include <thread>

#include "daqc/units.hpp"

namespace daqc {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  parts.push_back(current);
  return parts;
}

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t");
  return s.substr(begin, end - begin + 1);
}

void parallel_over_columns(Eigen::Index cols, const std::function<void(Eigen::Index)>& work) {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (hw == 1 || cols < 8) {
    for (Eigen::Index c = 0; c < cols; ++c) work(c);
    return;
  }
  std::vector<std::thread> threads;
  std::atomic<Eigen::Index> next{0};
  for (unsigned t = 0; t < hw; ++t) {
    threads.emplace_back([&] {
      for (;;) {
        const Eigen::Index c = next.fetch_add(1);
        if (c >= cols) return;
        work(c);
      }
    });
  }
  for (auto& t : threads) t.join();
}

}  // namespace

std::string format_g12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string format_f3(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

InitialStateSpec InitialStateSpec::parse(const std::string& text) {
  InitialStateSpec spec;
  const std::string t = trim(text);
  if (t == "ghz-pair") {
    spec.kind = Kind::GhzPair;
    return spec;
  }
  if (t == "random") {  // seed supplied separately (e.g. a --seed flag)
    spec.kind = Kind::Random;
    return spec;
  }
  if (t.rfind("random(", 0) == 0 && t.back() == ')') {
    spec.kind = Kind::Random;
    const std::string seed_text = t.substr(7, t.size() - 8);
    try {
      spec.seed = std::stoull(seed_text);
    } catch (const std::exception&) {
      throw ValidationError("initial state: bad seed in " + t);
    }
    return spec;
  }
  spec.kind = Kind::Occupations;
  for (const auto& raw : split(t, ';')) {
    const std::string entry = trim(raw);
    if (entry.empty()) continue;
    Occupation occ;
    std::string rest;
    if (entry.rfind("up@", 0) == 0) {
      occ.spin = Spin::Up;
      rest = entry.substr(3);
    } else if (entry.rfind("down@", 0) == 0) {
      occ.spin = Spin::Down;
      rest = entry.substr(5);
    } else {
      throw ValidationError("initial state: expected up@row,col or down@row,col in '" + entry +
                            "'");
    }
    const auto coords = split(rest, ',');
    if (coords.size() != 2)
      throw ValidationError("initial state: expected row,col in '" + entry + "'");
    try {
      occ.row = std::stoi(trim(coords[0]));
      occ.col = std::stoi(trim(coords[1]));
    } catch (const std::exception&) {
      throw ValidationError("initial state: bad coordinates in '" + entry + "'");
    }
    spec.occupations.push_back(occ);
  }
  return spec;
}

std::string InitialStateSpec::describe() const {
  switch (kind) {
    case Kind::GhzPair: return "ghz-pair";
    case Kind::Random: return "random(" + std::to_string(seed) + ")";
    default: {
      std::string out;
      for (std::size_t i = 0; i < occupations.size(); ++i) {
        if (i) out.push_back(';');
        const auto& o = occupations[i];
        out += (o.spin == Spin::Up ? "up@" : "down@");
        out += std::to_string(o.row) + "," + std::to_string(o.col);
      }
      return out.empty() ? "vacuum" : out;
    }
  }
}

StateVector InitialStateSpec::realize(const LatticeSpec& lattice) const {
  lattice.simulation_guard();
  const int n = lattice.n_qubits();
  switch (kind) {
    case Kind::Random: {
      PortableRng rng(seed);
      return haar_random_state(n, rng);
    }
    case Kind::GhzPair: {
      DenseVector amps = DenseVector::Zero(static_cast<Eigen::Index>(1) << n);
      const std::string all(static_cast<std::size_t>(n), '1');
      const std::string none(static_cast<std::size_t>(n), '0');
      amps[StateVector::basis_index(all)] = 1.0 / std::sqrt(2.0);
      amps[StateVector::basis_index(none)] = 1.0 / std::sqrt(2.0);
      return StateVector(n, std::move(amps));
    }
    default: {
      std::vector<int> excited;
      for (const auto& o : occupations) {
        if (o.row < 1 || o.row > lattice.rows || o.col < 1 || o.col > lattice.cols)
          throw ValidationError("initial state: occupation outside the lattice");
        excited.push_back(spinless_index(lattice, o.row - 1, o.col, o.spin));
      }
      return StateVector::from_excited(n, excited);
    }
  }
}

namespace {
int guarded_qubits(const LatticeSpec& lattice) {
  lattice.simulation_guard();
  return lattice.n_qubits();
}
}  // namespace

HoppingPropagator::HoppingPropagator(const LatticeSpec& lattice)
    : propagator_(guarded_qubits(lattice), hubbard_spin_terms(lattice)) {}

StateVector HoppingPropagator::apply(double t_ns, const StateVector& psi0) const {
  return propagator_.apply(t_ns, psi0);
}

void HoppingPropagator::apply_to_columns(double t_ns, DenseMatrix& states) const {
  propagator_.apply_to_columns(t_ns, states);
}

StateVector exact_hopping_evolution(const LatticeSpec& lattice, double t_ns,
                                    const StateVector& psi0) {
  if (t_ns < 0.0) throw ValidationError("exact_hopping_evolution: time must be >= 0");
  return HoppingPropagator(lattice).apply(t_ns, psi0);
}

FidelityReport fidelity_experiment(const ExperimentConfig& cfg) {
  cfg.lattice.simulation_guard();
  if (cfg.at_samples < 2) throw ValidationError("fidelity_experiment: need at least 2 samples");
  const StateVector psi0 = cfg.initial.realize(cfg.lattice);
  const HoppingPropagator exact(cfg.lattice);

  FidelityReport report;
  for (int s = 0; s < cfg.at_samples; ++s) {
    const double at = cfg.at * s / (cfg.at_samples - 1);
    const double t = (cfg.lattice.a != 0.0) ? at / cfg.lattice.a : 0.0;
    const StateVector target = exact.apply(t, psi0);
    for (int n : cfg.steps) {
      const StateVector evolved =
          (at == 0.0) ? psi0 : simulate_schedule(compile_schedule(cfg.lattice, t, n), psi0);
      report.rows.push_back({at, n, fidelity(target, evolved)});
    }
  }
  return report;
}

FidelityReport mean_fidelity_experiment(const ExperimentConfig& cfg) {
  cfg.lattice.simulation_guard();
  if (cfg.samples < 1) throw ValidationError("mean_fidelity_experiment: need samples >= 1");
  const int n_qubits = cfg.lattice.n_qubits();
  const auto dim = static_cast<Eigen::Index>(1) << n_qubits;
  const double t = (cfg.lattice.a != 0.0) ? cfg.at / cfg.lattice.a : 0.0;

  // All states drawn from one sequential stream so the ensemble is pinned by
  // the seed alone.
  PortableRng rng(cfg.seed);
  DenseMatrix states(dim, cfg.samples);
  for (int c = 0; c < cfg.samples; ++c)
    states.col(c) = haar_random_state(n_qubits, rng).amplitudes();

  DenseMatrix exact_states = states;
  const HoppingPropagator exact(cfg.lattice);
  exact.apply_to_columns(t, exact_states);

  FidelityReport report;
  std::vector<double> fidelities(static_cast<std::size_t>(cfg.samples));
  for (int n : cfg.steps) {
    const Schedule schedule = compile_schedule(cfg.lattice, t, n);
    DenseMatrix evolved = states;
    parallel_over_columns(cfg.samples, [&](Eigen::Index c) {
      apply_schedule_in_place(schedule, evolved.col(c));
    });
    for (int c = 0; c < cfg.samples; ++c)
      fidelities[static_cast<std::size_t>(c)] =
          std::norm(exact_states.col(c).dot(evolved.col(c)));

    FidelitySummary summary;
    summary.n = n;
    summary.samples = cfg.samples;
    double mean = 0.0;
    for (double f : fidelities) mean += f;
    mean /= cfg.samples;
    double var = 0.0;
    for (double f : fidelities) var += (f - mean) * (f - mean);
    summary.mean = mean;
    summary.stddev = cfg.samples > 1 ? std::sqrt(var / (cfg.samples - 1)) : 0.0;
    report.summaries.push_back(summary);
  }
  return report;
}

std::string fidelity_rows_csv(const FidelityReport& report) {
  std::string out = "at,n,fidelity\n";
  for (const auto& row : report.rows)
    out += format_g12(row.at) + "," + std::to_string(row.n) + "," + format_g12(row.fidelity) +
           "\n";
  return out;
}

std::string fidelity_summary_csv(const FidelityReport& report) {
  std::string out = "n,samples,mean_fidelity,std_fidelity\n";
  for (const auto& s : report.summaries)
    out += std::to_string(s.n) + "," + std::to_string(s.samples) + "," + format_g12(s.mean) +
           "," + format_g12(s.stddev) + "\n";
  return out;
}

std::string timing_table_csv(const std::vector<int>& cols_list, double at,
                             const std::vector<int>& steps_list, double ag1_rad_per_ns) {
  std::string out = "cols,n,tau_a_ns,tau_b_ns,tau_sim_us\n";
  for (int cols : cols_list) {
    for (int n : steps_list) {
      const TimingReport r = timing(cols, at, n, ag1_rad_per_ns);
      out += std::to_string(cols) + "," + std::to_string(n) + "," + format_f3(r.tau_a_ns) + "," +
             format_f3(r.tau_b_ns) + "," + format_f3(r.tau_sim_us) + "\n";
    }
  }
  return out;
}

RwaScenario rwa_scenario(const std::string& name) {
  const double w1 = ghz_to_rad_per_ns(9.0);
  const double w2 = ghz_to_rad_per_ns(1.0);
  RwaScenario s;
  s.name = name;
  if (name == "two-qubit") {
    // Two-qubit inversion check: g0/2pi = 0.2 GHz, A g1/2pi = 0.08 GHz,
    // phases (2pi, pi) activate the XX interaction.
    s.chain = ChainSpec{2, w1, w2, {ghz_to_rad_per_ns(0.2)}, {ghz_to_rad_per_ns(0.08)}};
    DriveSettings d;
    d.link = 1;
    d.a1 = d.a2 = 1.0;
    d.nu1 = s.chain.delta();
    d.nu2 = s.chain.mu();
    d.phase1 = RationalAngle::pi_times(2);
    d.phase2 = RationalAngle::pi_times(1);
    s.drives = {d};
    s.observables = {"01", "10"};
    s.initial_label = "01";
    s.t_max_ns = 12.5;  // one full inversion period at g1*A = 2pi*0.08 rad/ns
  } else if (name == "three-qubit") {
    s.chain = ChainSpec{3, w1, w2,
                        {ghz_to_rad_per_ns(0.2), ghz_to_rad_per_ns(0.2)},
                        {ghz_to_rad_per_ns(0.1), ghz_to_rad_per_ns(0.1)}};
    for (int link = 1; link <= 2; ++link) {
      DriveSettings d;
      d.link = link;
      d.a1 = d.a2 = 1.0;
      d.nu1 = s.chain.delta();
      d.nu2 = s.chain.mu();
      d.phase1 = RationalAngle::pi_times(2);
      d.phase2 = RationalAngle::pi_times(1);
      s.drives.push_back(d);
    }
    s.observables = {"000", "011", "101"};
    s.initial_label = "000";
    s.t_max_ns = 20.0;
  } else if (name == "exchange") {
    // Single-tone activation: nu2 absent, exchange at nu1 = Delta.
    s.chain = ChainSpec{2, w1, w2, {ghz_to_rad_per_ns(0.05)}, {ghz_to_rad_per_ns(0.08)}};
    DriveSettings d;
    d.link = 1;
    d.a1 = 1.0;
    d.a2 = 0.0;
    d.nu1 = s.chain.delta();
    d.nu2 = 0.0;
    d.phase1 = RationalAngle::pi_times(2);
    d.phase2 = RationalAngle::pi_times(2);
    s.drives = {d};
    s.observables = {"01", "10", "00", "11"};
    s.initial_label = "01";
    s.t_max_ns = 25.0;  // inversion period doubles with one tone
  } else if (name == "double-excitation") {
    s.chain = ChainSpec{2, w1, w2, {ghz_to_rad_per_ns(0.05)}, {ghz_to_rad_per_ns(0.08)}};
    DriveSettings d;
    d.link = 1;
    d.a1 = 0.0;
    d.a2 = 1.0;
    d.nu1 = 0.0;
    d.nu2 = s.chain.mu();
    d.phase1 = RationalAngle::pi_times(2);
    d.phase2 = RationalAngle::pi_times(2);
    s.drives = {d};
    s.observables = {"00", "11", "01", "10"};
    s.initial_label = "00";
    s.t_max_ns = 25.0;
  } else {
    throw ValidationError("unknown rwa scenario: " + name);
  }
  return s;
}

RwaReport rwa_report(const RwaScenario& scenario) {
  const StateVector psi0 = StateVector::basis_state(scenario.initial_label);
  RwaReport report;
  report.scenario = scenario;
  report.comparison = rwa_deviation(scenario.chain, scenario.drives, scenario.t_max_ns,
                                    scenario.dt_ns, scenario.observables, psi0);

  std::string csv = "t_ns";
  for (const auto& label : scenario.observables) csv += ",p_full_" + label;
  for (const auto& label : scenario.observables) csv += ",p_rwa_" + label;
  csv += "\n";
  const auto& cmp = report.comparison;
  for (std::size_t s = 0; s < cmp.times_ns.size(); ++s) {
    csv += format_g12(cmp.times_ns[s]);
    for (double p : cmp.full_populations[s]) csv += "," + format_g12(p);
    for (double p : cmp.rwa_populations[s]) csv += "," + format_g12(p);
    csv += "\n";
  }
  report.csv = std::move(csv);
  return report;
}

std::string spectrum_csv(const CpbSpectrumRequest& req, bool transitions) {
  const auto spectra = cpb_spectrum(req);
  std::string out = "n_g";
  if (transitions) {
    for (int m = 1; m < req.levels; ++m) out += ",T" + std::to_string(m);
  } else {
    for (int m = 0; m < req.levels; ++m) out += ",E" + std::to_string(m);
  }
  out += "\n";
  for (std::size_t i = 0; i < req.n_g_grid.size(); ++i) {
    out += format_g12(req.n_g_grid[i]);
    const auto& levels = spectra[i];
    if (transitions) {
      for (int m = 1; m < req.levels; ++m)
        out += "," + format_g12(levels[static_cast<std::size_t>(m)] - levels[0]);
    } else {
      for (int m = 0; m < req.levels; ++m) out += "," + format_g12(levels[static_cast<std::size_t>(m)]);
    }
    out += "\n";
  }
  return out;
}

std::string impedance_csv(const TwoQubitCircuitParams& params,
                          const std::vector<double>& phi_grid) {
  std::string out = "phi_ext,ratio\n";
  for (double phi : phi_grid)
    out += format_g12(phi) + "," + format_g12(impedance_ratio(params, phi)) + "\n";
  return out;
}

}  // namespace daqc
