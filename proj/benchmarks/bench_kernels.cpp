#include "otoc/otoc.hpp"
#include "otoc/synthesis.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace otoc;

namespace {

Statevector random_state(int width, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    std::vector<Complex> amps(std::uint64_t(1) << width);
    for (auto& a : amps) a = Complex(gauss(rng), gauss(rng));
    return Statevector::from_amplitudes(width, std::move(amps));
}

void BM_ApplyH(benchmark::State& state) {
    const int width = static_cast<int>(state.range(0));
    auto s = random_state(width, 1);
    const Gate g = Gate::h(width / 2 + 1);
    for (auto _ : state) {
        apply_in_place(g, s);
        benchmark::DoNotOptimize(s.amplitudes().data());
    }
    state.SetItemsProcessed(state.iterations() * (1LL << width));
}

void BM_ApplyRX(benchmark::State& state) {
    const int width = static_cast<int>(state.range(0));
    auto s = random_state(width, 2);
    const Gate g = Gate::rx(0.123, width / 2 + 1);
    for (auto _ : state) {
        apply_in_place(g, s);
        benchmark::DoNotOptimize(s.amplitudes().data());
    }
    state.SetItemsProcessed(state.iterations() * (1LL << width));
}

void BM_ApplyCNOT(benchmark::State& state) {
    const int width = static_cast<int>(state.range(0));
    auto s = random_state(width, 3);
    const Gate g = Gate::cnot(width, 1);
    for (auto _ : state) {
        apply_in_place(g, s);
        benchmark::DoNotOptimize(s.amplitudes().data());
    }
    state.SetItemsProcessed(state.iterations() * (1LL << width));
}

void BM_TrotterStep(benchmark::State& state) {
    const auto h = build_ising_hamiltonian(9, -1, 1, 1);
    const auto step = trotter_step(h, 0.001, 4, TrotterSplit::hz_hx);
    auto s = random_state(9, 4);
    for (auto _ : state) {
        apply_in_place(step, s);
        benchmark::DoNotOptimize(s.amplitudes().data());
    }
    state.counters["gates"] = static_cast<double>(step.size());
}

void BM_Synthesize(benchmark::State& state) {
    const auto sigma = PauliString::parse("XYZIZXYIZ");
    for (auto _ : state) {
        auto synth = synthesize_exponential(sigma, 0.001);
        benchmark::DoNotOptimize(synth.circuit.size());
    }
}

void BM_ExpectPauli(benchmark::State& state) {
    const int width = static_cast<int>(state.range(0));
    const auto s = random_state(width, 5);
    const auto x_last = PauliString::single_site(width, width, PauliLetter::X);
    for (auto _ : state) {
        benchmark::DoNotOptimize(expect_pauli(s, x_last).value);
    }
}

void BM_OraclePropagation(benchmark::State& state) {
    const auto h = build_ising_hamiltonian(9, -1, 1, 1);
    const ExactEvolver evolver(h);
    const auto s = random_state(9, 6);
    double t = 0.1;
    for (auto _ : state) {
        auto out = evolver.evolve(t, s);
        benchmark::DoNotOptimize(out.amplitudes().data());
        t += 0.1;
    }
}

}  // namespace

BENCHMARK(BM_ApplyH)->DenseRange(10, 18, 4);
BENCHMARK(BM_ApplyRX)->DenseRange(10, 18, 4);
BENCHMARK(BM_ApplyCNOT)->DenseRange(10, 18, 4);
BENCHMARK(BM_TrotterStep);
BENCHMARK(BM_Synthesize);
BENCHMARK(BM_ExpectPauli)->DenseRange(10, 18, 4);
BENCHMARK(BM_OraclePropagation);

BENCHMARK_MAIN();
