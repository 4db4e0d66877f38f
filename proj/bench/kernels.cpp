// Serial reference vs OpenMP kernels. Run with OMP_NUM_THREADS set to the
// core count; on one core the two variants should be within noise.

#include "sykspike/chord_diagrams.hpp"
#include "sykspike/ensemble.hpp"
#include "sykspike/hamiltonian.hpp"

#include <benchmark/benchmark.h>

using namespace sykspike;

namespace {

void BM_AssembleBlock(benchmark::State& state, ed::KernelMode mode) {
    const int N = static_cast<int>(state.range(0));
    const auto alg = ed::build_majoranas(N);
    const auto terms = ed::hamiltonian_terms(alg, 4, ed::draw_couplings(N, 4, 1));
    for (auto _ : state) benchmark::DoNotOptimize(ed::assemble_block(terms, alg.qubits(), 0, mode));
}
BENCHMARK_CAPTURE(BM_AssembleBlock, serial, ed::KernelMode::Serial)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_AssembleBlock, parallel, ed::KernelMode::Parallel)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_Ensemble(benchmark::State& state, ed::KernelMode mode) {
    ed::EnsembleSpec spec;
    spec.N = static_cast<int>(state.range(0));
    spec.sample_count = 8;
    for (auto _ : state) {
        benchmark::DoNotOptimize(mode == ed::KernelMode::Serial ? ed::run_ensemble_serial(spec)
                                                                : ed::run_ensemble(spec, {mode, 0}));
    }
}
BENCHMARK_CAPTURE(BM_Ensemble, serial, ed::KernelMode::Serial)->Arg(16)->Arg(18)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Ensemble, parallel, ed::KernelMode::Parallel)->Arg(16)->Arg(18)->Unit(benchmark::kMillisecond);

void BM_CrossingPolynomialSerial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(qcomb::crossing_polynomial_serial(static_cast<int>(state.range(0))));
}
void BM_CrossingPolynomialParallel(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(qcomb::crossing_polynomial(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_CrossingPolynomialSerial)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CrossingPolynomialParallel)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_EnumerateSerial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(qcomb::enumerate_chord_diagrams_serial(static_cast<int>(state.range(0))));
}
void BM_EnumerateParallel(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(qcomb::enumerate_chord_diagrams(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_EnumerateSerial)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateParallel)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
