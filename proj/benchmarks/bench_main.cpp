#include <benchmark/benchmark.h>

#include "daqc/circuit.hpp"
#include "daqc/compiler.hpp"
#include "daqc/experiments.hpp"
#include "daqc/random.hpp"
#include "daqc/units.hpp"

namespace {

using namespace daqc;

void BM_TwoLocalRotation(benchmark::State& state) {
  const int n = 12;
  PortableRng rng(1);
  auto psi = haar_random_state(n, rng);
  DenseVector amps = psi.amplitudes();
  for (auto _ : state) {
    apply_two_local_rotation(amps, n, 5, Pauli::Y, 6, Pauli::X, 0.01);
    benchmark::DoNotOptimize(amps.data());
  }
}
BENCHMARK(BM_TwoLocalRotation);

void BM_TrotterStep(benchmark::State& state) {
  const LatticeSpec spec{2, 3, 1.0, 0.0, false};
  const auto schedule = compile_schedule(spec, 4.0, 1);
  PortableRng rng(2);
  auto psi = haar_random_state(spec.n_qubits(), rng);
  DenseVector amps = psi.amplitudes();
  for (auto _ : state) {
    apply_schedule_in_place(schedule, amps);
    benchmark::DoNotOptimize(amps.data());
  }
}
BENCHMARK(BM_TrotterStep);

void BM_CompileSchedule(benchmark::State& state) {
  const LatticeSpec spec{static_cast<int>(state.range(0)), static_cast<int>(state.range(0)) + 1,
                         1.0, 0.0, false};
  for (auto _ : state) {
    auto schedule = compile_schedule(spec, 4.0, 1);
    benchmark::DoNotOptimize(schedule.step_blocks.size());
  }
}
BENCHMARK(BM_CompileSchedule)->Arg(2)->Arg(4)->Arg(8);

void BM_PauliApply(benchmark::State& state) {
  const int n = 12;
  PortableRng rng(3);
  auto psi = haar_random_state(n, rng);
  DenseVector out(psi.dim());
  const auto [xzx, yzy] = jw_hopping_string(1, 5, n);
  for (auto _ : state) {
    out.setZero();
    xzx.apply_add(psi.amplitudes(), out);
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_PauliApply);

void BM_CpbSpectrumPoint(benchmark::State& state) {
  CpbSpectrumRequest req;
  req.e_c = 1.0;
  req.e_j = 1.0;
  req.gamma = 1.0;
  req.truncation = 10;
  req.levels = 4;
  req.n_g_grid = {0.37};
  for (auto _ : state) {
    auto levels = cpb_spectrum(req);
    benchmark::DoNotOptimize(levels[0][0]);
  }
}
BENCHMARK(BM_CpbSpectrumPoint);

void BM_StaticPropagator8(benchmark::State& state) {
  const auto h = HermitianOperator::from_terms(
      8, {PauliString::from_label("XXIIIIII", 0.5), PauliString::from_label("IIYYIIII", 0.5),
          PauliString::from_label("ZIIIIIII", 1.0)});
  const StaticPropagator prop(h);
  PortableRng rng(4);
  auto psi = haar_random_state(8, rng);
  DenseVector amps = psi.amplitudes();
  for (auto _ : state) {
    prop.apply_in_place(0.1, amps);
    benchmark::DoNotOptimize(amps.data());
  }
}
BENCHMARK(BM_StaticPropagator8);

}  // namespace

BENCHMARK_MAIN();
