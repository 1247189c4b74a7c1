#include "swaptest/complex_matrix.hpp"
#include "swaptest/permanent.hpp"
#include "swaptest/random.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace swaptest;

namespace {

ComplexMatrix random_matrix(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = Complex(gaussian(rng), gaussian(rng));
        }
    }
    return m;
}

void BM_PermanentNaive(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const ComplexMatrix m = random_matrix(n, 42);
    for (auto _ : state) {
        benchmark::DoNotOptimize(permanent_naive(m));
    }
}
BENCHMARK(BM_PermanentNaive)->DenseRange(2, 8);

void BM_PermanentRyser(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const ComplexMatrix m = random_matrix(n, 42);
    for (auto _ : state) {
        benchmark::DoNotOptimize(permanent_ryser(m));
    }
}
BENCHMARK(BM_PermanentRyser)->DenseRange(2, 16)->RangeMultiplier(2);

} // namespace

BENCHMARK_MAIN();
