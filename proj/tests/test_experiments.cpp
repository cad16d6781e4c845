#include <algorithm>

#include <Eigen/Eigenvalues>

#include "daqc/experiments.hpp"
#include "daqc/units.hpp"
#include "doctest.h"

using namespace daqc;

TEST_CASE("initial-state parsing") {
  const auto occ = InitialStateSpec::parse("up@1,1;down@2,2");
  REQUIRE(occ.occupations.size() == 2);
  CHECK(occ.occupations[0].spin == Spin::Up);
  CHECK(occ.occupations[1].spin == Spin::Down);
  CHECK(occ.occupations[1].row == 2);

  CHECK(InitialStateSpec::parse("ghz-pair").kind == InitialStateSpec::Kind::GhzPair);
  const auto rnd = InitialStateSpec::parse("random(42)");
  CHECK(rnd.kind == InitialStateSpec::Kind::Random);
  CHECK(rnd.seed == 42);

  CHECK_THROWS_AS(InitialStateSpec::parse("sideways@1,1"), ValidationError);
  CHECK_THROWS_AS(InitialStateSpec::parse("up@1"), ValidationError);
}

TEST_CASE("initial-state realization") {
  const LatticeSpec lattice{2, 3, 1.0, 0.0, false};

  const auto single = InitialStateSpec::parse("up@1,1").realize(lattice);
  CHECK(single.population("100000000000") == doctest::Approx(1.0));

  const auto fig_a = InitialStateSpec::parse("up@1,1;up@2,2;up@3,1").realize(lattice);
  CHECK(fig_a.excitation_number() == doctest::Approx(3.0));
  // Chain qubits 1, 7, 9.
  CHECK(fig_a.population("100000101000") == doctest::Approx(1.0));

  const auto ghz = InitialStateSpec::parse("ghz-pair").realize(lattice);
  CHECK(ghz.population("111111111111") == doctest::Approx(0.5));
  CHECK(ghz.population("000000000000") == doctest::Approx(0.5));

  CHECK_THROWS_AS(InitialStateSpec::parse("up@4,1").realize(lattice), ValidationError);
}

TEST_CASE("exact hopping evolution basics") {
  const LatticeSpec lattice{2, 2, 1.0, 0.0, false};
  const auto vacuum = StateVector::vacuum(lattice.n_qubits());
  const auto still = exact_hopping_evolution(lattice, 2.5, vacuum);
  CHECK(fidelity(still, vacuum) == doctest::Approx(1.0).epsilon(1e-12));

  const auto psi = InitialStateSpec::parse("up@1,1").realize(lattice);
  const auto frozen = exact_hopping_evolution(lattice, 0.0, psi);
  CHECK(fidelity(frozen, psi) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("single-particle sector matches the one-body oracle") {
  const LatticeSpec lattice{2, 2, 0.7, 0.0, false};
  const int n = lattice.n_qubits();
  const double t = 1.9;

  // One-body oracle: the hopping matrix on chain positions, exponentiated.
  Eigen::MatrixXd one_body = Eigen::MatrixXd::Zero(n, n);
  for (const auto& [j, k] : hopping_pairs(lattice)) {
    one_body(j - 1, k - 1) = lattice.a;
    one_body(k - 1, j - 1) = lattice.a;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(one_body);
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(n, n);
  for (int m = 0; m < n; ++m) {
    const Eigen::MatrixXd outer =
        solver.eigenvectors().col(m) * solver.eigenvectors().col(m).transpose();
    u += std::exp(Complex(0.0, -solver.eigenvalues()[m] * t)) * outer.cast<Complex>();
  }

  const int start = 2;  // particle on chain position 2
  const auto psi0 = StateVector::from_excited(n, {start});
  const auto evolved = exact_hopping_evolution(lattice, t, psi0);
  for (int q = 1; q <= n; ++q) {
    const auto target = StateVector::from_excited(n, {q});
    const Complex amp = target.amplitudes().dot(evolved.amplitudes());
    CHECK(std::abs(amp - u(q - 1, start - 1)) < 1e-10);
  }
}

TEST_CASE("mean fidelity benchmark is deterministic and converging") {
  ExperimentConfig cfg;
  cfg.lattice = LatticeSpec{2, 2, 1.0, 0.0, false};
  cfg.at = 4.0;
  cfg.steps = {4, 8};
  cfg.samples = 24;
  cfg.seed = 99;

  const auto once = mean_fidelity_experiment(cfg);
  const auto twice = mean_fidelity_experiment(cfg);
  CHECK(fidelity_summary_csv(once) == fidelity_summary_csv(twice));

  REQUIRE(once.summaries.size() == 2);
  for (const auto& s : once.summaries) {
    CHECK(s.mean >= 0.0);
    // The 2x2 split is exact, so the mean sits at 1 up to round-off.
    CHECK(s.mean <= 1.0 + 1e-12);
  }
  CHECK(once.summaries[1].mean > once.summaries[0].mean - 0.005);
}

TEST_CASE("fidelity sweep stays in range and starts at one") {
  ExperimentConfig cfg;
  cfg.lattice = LatticeSpec{2, 2, 1.0, 0.0, false};
  cfg.at = 2.0;
  cfg.at_samples = 5;
  cfg.steps = {6};
  cfg.initial = InitialStateSpec::parse("up@1,1");
  const auto report = fidelity_experiment(cfg);
  REQUIRE(report.rows.size() == 5);
  CHECK(report.rows.front().fidelity == doctest::Approx(1.0));
  for (const auto& row : report.rows) {
    CHECK(row.fidelity >= 0.0);
    CHECK(row.fidelity <= 1.0 + 1e-12);
  }
}

TEST_CASE("haar states look uniform on average") {
  const int n = 3;
  const int draws = 1000;
  const auto dim = static_cast<Eigen::Index>(1) << n;
  PortableRng rng(2024);
  Eigen::VectorXd mean_mod2 = Eigen::VectorXd::Zero(dim);
  for (int d = 0; d < draws; ++d) {
    const auto psi = haar_random_state(n, rng);
    for (Eigen::Index i = 0; i < dim; ++i) mean_mod2[i] += std::norm(psi.amplitudes()[i]);
  }
  mean_mod2 /= draws;
  // Var(|a_i|^2) = (d-1)/(d^2 (d+1)) for Haar states of dimension d.
  const double dd = static_cast<double>(dim);
  const double sigma = std::sqrt((dd - 1.0) / (dd * dd * (dd + 1.0)) / draws);
  for (Eigen::Index i = 0; i < dim; ++i)
    CHECK(std::abs(mean_mod2[i] - 1.0 / dd) < 3.0 * sigma);
}

TEST_CASE("timing table renders three decimals") {
  const auto csv = timing_table_csv({2}, 4.0, {10, 20, 30}, ghz_to_rad_per_ns(0.08));
  CHECK(csv.find("cols,n,tau_a_ns,tau_b_ns,tau_sim_us\n") == 0);
  CHECK(csv.find("2,10,0.796,3.125,0.161\n") != std::string::npos);
  CHECK(csv.find("2,20,0.398,3.125,0.156\n") != std::string::npos);
}

TEST_CASE("exchange scenario keeps the even sector empty") {
  auto scenario = rwa_scenario("exchange");
  scenario.t_max_ns = 8.0;  // shortened; the conservation holds pointwise
  const auto report = rwa_report(scenario);
  for (const auto& pops : report.comparison.full_populations) {
    CHECK(pops[2] < 0.05);  // |00>
    CHECK(pops[3] < 0.05);  // |11>
  }
  CHECK(report.csv.rfind("t_ns,p_full_01,p_full_10,p_full_00,p_full_11", 0) == 0);
}

TEST_CASE("spectrum csv emits the requested grid") {
  CpbSpectrumRequest req;
  req.e_c = 1.0;
  req.e_j = 1.0;
  req.gamma = 1.0;
  req.levels = 4;
  req.truncation = 10;
  req.n_g_grid = {0.5};
  const auto csv = spectrum_csv(req, false);
  CHECK(csv.rfind("n_g,E0,E1,E2,E3\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 2);

  const auto transitions = spectrum_csv(req, true);
  CHECK(transitions.rfind("n_g,T1,T2,T3\n", 0) == 0);
}

TEST_CASE("impedance csv single point") {
  TwoQubitCircuitParams p;
  p.c_g1 = p.c_g2 = 0.5;
  p.c_j1 = p.c_j2 = 0.5;
  p.c_c = 0.4;
  p.c_s = 12.0;
  p.e_j1 = ghz_to_rad_per_ns(9.0);
  p.e_j2 = ghz_to_rad_per_ns(1.0);
  p.e_js = ghz_to_rad_per_ns(50.0);
  const auto csv = impedance_csv(p, {0.3});
  CHECK(csv.rfind("phi_ext,ratio\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 2);
}
