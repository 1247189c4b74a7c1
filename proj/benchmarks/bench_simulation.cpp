#include "swaptest/decision_rule.hpp"
#include "swaptest/interferometer.hpp"
#include "swaptest/photon_statistics.hpp"
#include "swaptest/random.hpp"
#include "swaptest/swap_circuit.hpp"

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

using namespace swaptest;

namespace {

void BM_Distribution(benchmark::State &state) {
    const auto n = static_cast<int>(state.range(0));
    const ComplexMatrix u = hadamard_walsh(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(compute_distribution(u, OverlapSpec(0.5)));
    }
    state.SetLabel("M=" + std::to_string(1 << n));
}
BENCHMARK(BM_Distribution)->DenseRange(1, 3);

void BM_AcceptanceProbability(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const DecisionRule rule = DecisionRule::for_group(GroupSpec(std::vector<int>(n, 2)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(acceptance_probability(rule, OverlapSpec(0.25)));
    }
    state.SetLabel("M=" + std::to_string(std::size_t{1} << n));
}
BENCHMARK(BM_AcceptanceProbability)->DenseRange(1, 3);

void BM_PostprocessAcceptBit(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const DecisionRule rule = DecisionRule::for_group(GroupSpec(std::vector<int>(n, 2)));
    const auto patterns = enumerate_patterns(rule.size());
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(accept(rule, patterns[i]));
        i = (i + 1) % patterns.size();
    }
    state.SetLabel("M=" + std::to_string(std::size_t{1} << n));
}
BENCHMARK(BM_PostprocessAcceptBit)->DenseRange(1, 3);

void BM_SwapCircuit(benchmark::State &state) {
    const auto m = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(7);
    const auto phi = random_state(2, rng);
    const auto psi = random_state(2, rng);
    const CircuitLayout layout = build_layout(m, LayoutVariant::full);
    for (auto _ : state) {
        benchmark::DoNotOptimize(accept_probability(layout, phi, psi));
    }
}
BENCHMARK(BM_SwapCircuit)->RangeMultiplier(2)->Range(2, 16);

void BM_Sample(benchmark::State &state) {
    const ComplexMatrix u = hadamard_walsh(2);
    const auto shots = static_cast<std::size_t>(state.range(0));
    std::uint64_t seed = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample(u, OverlapSpec(0.5), shots, seed++));
    }
}
BENCHMARK(BM_Sample)->Arg(1000)->Arg(10000);

} // namespace

BENCHMARK_MAIN();
