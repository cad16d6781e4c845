// Command-line front end: compiles fermion-lattice schedules, runs the
// exact-vs-DAQC fidelity benchmarks, validates the rotating-wave reduction,
// and sweeps the charge-qubit spectra. CSV everywhere, deterministic under
// fixed seeds.

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "daqc/experiments.hpp"
#include "daqc/schedule.hpp"
#include "daqc/units.hpp"

namespace {

using namespace daqc;

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) throw ValidationError("cannot open output file: " + path);
  os << content;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw ValidationError("bad integer list entry: " + item);
    }
  }
  if (out.empty()) throw ValidationError("empty integer list");
  return out;
}

struct CommonOptions {
  std::string out;
  std::string config;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--out", opts.out, "Output path ('-' or empty for stdout)");
  cmd->add_option("--config", opts.config,
                  "key=value defaults file ('#' comments); explicit flags win");
}

std::string trim_ws(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Expands "--config FILE" into option tokens appended after the user's own
// arguments. Only keys the command line does not already carry are added, so
// the file acts as a defaults layer.
std::vector<std::string> expand_config(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    else if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (path.empty()) return args;

  std::ifstream is(path);
  if (!is) throw ValidationError("cannot open config file: " + path);
  std::string line;
  while (std::getline(is, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim_ws(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ValidationError("config line is not key=value: " + line);
    const std::string key = "--" + trim_ws(line.substr(0, eq));
    const std::string value = trim_ws(line.substr(eq + 1));
    bool already = false;
    for (const auto& a : args)
      if (a == key || a.rfind(key + "=", 0) == 0) already = true;
    if (already) continue;
    const std::string lower = [&] {
      std::string v = value;
      for (char& c : v) c = static_cast<char>(std::tolower(c));
      return v;
    }();
    if (lower == "true" || lower == "false") {  // flag-style entry
      if (lower == "true") args.push_back(key);
      continue;
    }
    args.push_back(key);
    args.push_back(value);
  }
  return args;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"digital-analog compiler and simulator for charge-qubit chains"};
  app.require_subcommand(1);

  // ---- spectrum ---------------------------------------------------------
  auto* spectrum_cmd = app.add_subcommand("spectrum", "CPB charge-basis spectrum sweep");
  struct {
    double ej = 1.0, ec = 1.0, gamma = 1.0;  // GHz
    double ng_min = 0.0, ng_max = 1.0;
    int points = 101, levels = 4, ntrunc = 10;
    bool transitions = false;
    CommonOptions common;
  } spectrum_opts;
  spectrum_cmd->add_option("--ej", spectrum_opts.ej, "Josephson energy E_J/2pi [GHz]");
  spectrum_cmd->add_option("--ec", spectrum_opts.ec, "Charging energy E_C/2pi [GHz]");
  spectrum_cmd->add_option("--gamma", spectrum_opts.gamma, "sin^2 correction weight/2pi [GHz]");
  spectrum_cmd->add_option("--ng-min", spectrum_opts.ng_min, "Offset-charge grid start");
  spectrum_cmd->add_option("--ng-max", spectrum_opts.ng_max, "Offset-charge grid end");
  spectrum_cmd->add_option("--points", spectrum_opts.points, "Grid points");
  spectrum_cmd->add_option("--levels", spectrum_opts.levels, "Levels per grid point");
  spectrum_cmd->add_option("--ntrunc", spectrum_opts.ntrunc, "Charge truncation |n| <= N");
  spectrum_cmd->add_flag("--transitions", spectrum_opts.transitions,
                         "Emit gaps E_n - E_0 instead of absolute levels");
  add_common(spectrum_cmd, spectrum_opts.common);

  // ---- impedance --------------------------------------------------------
  auto* impedance_cmd = app.add_subcommand("impedance", "SQUID/qubit impedance-ratio sweep");
  struct {
    double ej1 = 9.0, ej2 = 1.0, ejs = 50.0;  // GHz
    double cg1 = 0.5, cj1 = 0.5, cg2 = 0.5, cj2 = 0.5, cc = 0.4, cs = 12.0;  // fF
    double phi_min = 0.0, phi_max = 1.47;
    int points = 101;
    CommonOptions common;
  } imp_opts;
  impedance_cmd->add_option("--ej1", imp_opts.ej1, "Qubit-1 Josephson energy [GHz]");
  impedance_cmd->add_option("--ej2", imp_opts.ej2, "Qubit-2 Josephson energy [GHz]");
  impedance_cmd->add_option("--ejs", imp_opts.ejs, "SQUID junction energy [GHz]");
  impedance_cmd->add_option("--cg1", imp_opts.cg1, "Gate capacitance 1 [fF]");
  impedance_cmd->add_option("--cj1", imp_opts.cj1, "Josephson capacitance 1 [fF]");
  impedance_cmd->add_option("--cg2", imp_opts.cg2, "Gate capacitance 2 [fF]");
  impedance_cmd->add_option("--cj2", imp_opts.cj2, "Josephson capacitance 2 [fF]");
  impedance_cmd->add_option("--cc", imp_opts.cc, "Coupling capacitance [fF]");
  impedance_cmd->add_option("--cs", imp_opts.cs, "SQUID capacitance [fF]");
  impedance_cmd->add_option("--phi-min", imp_opts.phi_min, "Flux grid start [rad]");
  impedance_cmd->add_option("--phi-max", imp_opts.phi_max, "Flux grid end [rad]");
  impedance_cmd->add_option("--points", imp_opts.points, "Grid points");
  add_common(impedance_cmd, imp_opts.common);

  // ---- rwa-check --------------------------------------------------------
  auto* rwa_cmd = app.add_subcommand("rwa-check",
                                     "Co-simulate lab-frame vs rotating-wave dynamics");
  struct {
    std::string model = "two-qubit";
    double tmax = -1.0, dt = -1.0;
    CommonOptions common;
  } rwa_opts;
  rwa_cmd->add_option("--model", rwa_opts.model,
                      "two-qubit | three-qubit | exchange | double-excitation");
  rwa_cmd->add_option("--tmax", rwa_opts.tmax, "Simulated window [ns] (preset default)");
  rwa_cmd->add_option("--dt", rwa_opts.dt, "Integrator step [ns] (preset default)");
  add_common(rwa_cmd, rwa_opts.common);

  // ---- compile ----------------------------------------------------------
  auto* compile_cmd = app.add_subcommand("compile", "Emit the analog-block schedule");
  struct {
    int cols = 2, rows = 3, steps = 10;
    double at = 4.0;
    bool coulomb = false;
    double b_over_a = 1.0;
    CommonOptions common;
  } compile_opts;
  compile_cmd->add_option("--cols", compile_opts.cols, "Lattice columns (l)");
  compile_cmd->add_option("--rows", compile_opts.rows, "Lattice rows (h >= l)");
  compile_cmd->add_option("--at", compile_opts.at, "Dimensionless simulated time A*t");
  compile_cmd->add_option("--steps", compile_opts.steps, "Trotter steps");
  compile_cmd->add_flag("--coulomb", compile_opts.coulomb, "Include the on-site factor");
  compile_cmd->add_option("--b", compile_opts.b_over_a, "On-site amplitude B/A");
  add_common(compile_cmd, compile_opts.common);

  // ---- simulate ---------------------------------------------------------
  auto* simulate_cmd = app.add_subcommand(
      "simulate", "Fidelity sweep of the compiled schedule against exact evolution");
  struct {
    int cols = 2, rows = 3;
    double at = 4.0;
    std::string steps = "10,20,30";
    std::string initial = "up@1,1";
    int samples = 81;
    std::uint64_t seed = 1;
    CommonOptions common;
  } sim_opts;
  simulate_cmd->add_option("--cols", sim_opts.cols, "Lattice columns (l)");
  simulate_cmd->add_option("--rows", sim_opts.rows, "Lattice rows (h >= l)");
  simulate_cmd->add_option("--at", sim_opts.at, "Dimensionless simulated time A*t");
  simulate_cmd->add_option("--steps", sim_opts.steps, "Comma list of Trotter steps");
  simulate_cmd->add_option("--initial", sim_opts.initial,
                           "Initial state: up@r,c;down@r,c | ghz-pair | random(seed)");
  simulate_cmd->add_option("--samples", sim_opts.samples, "Samples of A*t over [0, at]");
  simulate_cmd->add_option("--seed", sim_opts.seed, "Seed for --initial random");
  add_common(simulate_cmd, sim_opts.common);

  // ---- benchmark --------------------------------------------------------
  auto* bench_cmd = app.add_subcommand(
      "benchmark", "Mean endpoint fidelity over seeded random initial states");
  struct {
    int cols = 2, rows = 3;
    double at = 4.0;
    std::string steps = "10,20,30";
    int random = 1000;
    std::uint64_t seed = 1;
    CommonOptions common;
  } bench_opts;
  bench_cmd->add_option("--cols", bench_opts.cols, "Lattice columns (l)");
  bench_cmd->add_option("--rows", bench_opts.rows, "Lattice rows (h >= l)");
  bench_cmd->add_option("--at", bench_opts.at, "Dimensionless simulated time A*t");
  bench_cmd->add_option("--steps", bench_opts.steps, "Comma list of Trotter steps");
  bench_cmd->add_option("--random", bench_opts.random, "Random initial states");
  bench_cmd->add_option("--seed", bench_opts.seed, "Ensemble seed");
  add_common(bench_cmd, bench_opts.common);

  // ---- timing -----------------------------------------------------------
  auto* timing_cmd = app.add_subcommand("timing", "Gate and per-step timing table");
  struct {
    std::string cols = "2";
    double at = 4.0;
    std::string steps = "10,20,30";
    double ag1 = 0.08;  // GHz
    CommonOptions common;
  } timing_opts;
  timing_cmd->add_option("--cols", timing_opts.cols, "Comma list of lattice columns");
  timing_cmd->add_option("--at", timing_opts.at, "Dimensionless simulated time A*t");
  timing_cmd->add_option("--steps", timing_opts.steps, "Comma list of Trotter steps");
  timing_cmd->add_option("--ag1", timing_opts.ag1, "Drive strength A*g1/2pi [GHz]");
  add_common(timing_cmd, timing_opts.common);

  try {
    auto args = expand_config(argc, argv);
    std::reverse(args.begin(), args.end());  // CLI11 consumes from the back
    app.parse(args);

    if (spectrum_cmd->parsed()) {
      if (spectrum_opts.points < 1) throw ValidationError("need at least one grid point");
      // Work directly in GHz: the spectrum scales linearly, so emitting GHz
      // for GHz inputs keeps the interface symmetric.
      CpbSpectrumRequest req;
      req.e_j = spectrum_opts.ej;
      req.e_c = spectrum_opts.ec;
      req.gamma = spectrum_opts.gamma;
      req.truncation = spectrum_opts.ntrunc;
      req.levels = spectrum_opts.levels;
      for (int i = 0; i < spectrum_opts.points; ++i) {
        const double f = spectrum_opts.points == 1
                             ? 0.0
                             : static_cast<double>(i) / (spectrum_opts.points - 1);
        req.n_g_grid.push_back(spectrum_opts.ng_min +
                               f * (spectrum_opts.ng_max - spectrum_opts.ng_min));
      }
      write_output(spectrum_opts.common.out, spectrum_csv(req, spectrum_opts.transitions));
    } else if (impedance_cmd->parsed()) {
      TwoQubitCircuitParams p;
      p.c_g1 = imp_opts.cg1;
      p.c_j1 = imp_opts.cj1;
      p.c_g2 = imp_opts.cg2;
      p.c_j2 = imp_opts.cj2;
      p.c_c = imp_opts.cc;
      p.c_s = imp_opts.cs;
      p.e_j1 = ghz_to_rad_per_ns(imp_opts.ej1);
      p.e_j2 = ghz_to_rad_per_ns(imp_opts.ej2);
      p.e_js = ghz_to_rad_per_ns(imp_opts.ejs);
      p.v_g1 = p.v_g2 = 1.0;
      std::vector<double> grid;
      for (int i = 0; i < imp_opts.points; ++i) {
        const double f =
            imp_opts.points == 1 ? 0.0 : static_cast<double>(i) / (imp_opts.points - 1);
        grid.push_back(imp_opts.phi_min + f * (imp_opts.phi_max - imp_opts.phi_min));
      }
      write_output(imp_opts.common.out, impedance_csv(p, grid));
    } else if (rwa_cmd->parsed()) {
      auto scenario = rwa_scenario(rwa_opts.model);
      if (rwa_opts.tmax > 0.0) scenario.t_max_ns = rwa_opts.tmax;
      if (rwa_opts.dt > 0.0) scenario.dt_ns = rwa_opts.dt;
      if (const auto warn = scenario.chain.detuning_warning())
        std::cerr << "warning: " << *warn << "\n";
      const auto report = rwa_report(scenario);
      std::string csv = report.csv;
      csv += "# max_deviation=" + format_g12(report.comparison.max_deviation) + "\n";
      write_output(rwa_opts.common.out, csv);
      if (!rwa_opts.common.out.empty() && rwa_opts.common.out != "-")
        std::cout << "max population deviation: "
                  << format_g12(report.comparison.max_deviation) << "\n";
    } else if (compile_cmd->parsed()) {
      LatticeSpec spec{compile_opts.cols, compile_opts.rows, 1.0,
                       compile_opts.coulomb ? compile_opts.b_over_a : 0.0,
                       compile_opts.coulomb};
      const auto schedule = compile_schedule(spec, compile_opts.at, compile_opts.steps);
      write_output(compile_opts.common.out, schedule_to_string(schedule));
    } else if (simulate_cmd->parsed()) {
      ExperimentConfig cfg;
      cfg.lattice = LatticeSpec{sim_opts.cols, sim_opts.rows, 1.0, 0.0, false};
      cfg.at = sim_opts.at;
      cfg.at_samples = sim_opts.samples;
      cfg.steps = parse_int_list(sim_opts.steps);
      cfg.initial = InitialStateSpec::parse(sim_opts.initial);
      if (cfg.initial.kind == InitialStateSpec::Kind::Random && sim_opts.initial == "random")
        cfg.initial.seed = sim_opts.seed;
      write_output(sim_opts.common.out, fidelity_rows_csv(fidelity_experiment(cfg)));
    } else if (bench_cmd->parsed()) {
      ExperimentConfig cfg;
      cfg.lattice = LatticeSpec{bench_opts.cols, bench_opts.rows, 1.0, 0.0, false};
      cfg.at = bench_opts.at;
      cfg.steps = parse_int_list(bench_opts.steps);
      cfg.samples = bench_opts.random;
      cfg.seed = bench_opts.seed;
      write_output(bench_opts.common.out, fidelity_summary_csv(mean_fidelity_experiment(cfg)));
    } else if (timing_cmd->parsed()) {
      write_output(timing_opts.common.out,
                   timing_table_csv(parse_int_list(timing_opts.cols), timing_opts.at,
                                    parse_int_list(timing_opts.steps),
                                    ghz_to_rad_per_ns(timing_opts.ag1)));
    }
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    app.exit(e);
    return 2;
  } catch (const ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return 3;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
