#include <benchmark/benchmark.h>

#include <random>

#include "phisq/factorize.hpp"
#include "phisq/oracle.hpp"
#include "phisq/parse.hpp"
#include "phisq/representation.hpp"
#include "phisq/sampling.hpp"
#include "phisq/totient.hpp"

using namespace phisq;

static void BM_FactorU64(benchmark::State& state) {
    std::uint64_t n = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(factor(n));
        n = n % 1'000'000 + 1;
    }
}
BENCHMARK(BM_FactorU64);

static void BM_FactorSemiprime(benchmark::State& state) {
    const Natural n("1000000016000000063");
    for (auto _ : state) benchmark::DoNotOptimize(factor(n));
}
BENCHMARK(BM_FactorSemiprime);

static void BM_RepresentRandom(benchmark::State& state) {
    std::mt19937_64 rng(3);
    std::vector<FactoredRational> inputs;
    for (int i = 0; i < 256; ++i) inputs.push_back(random_rational(rng, state.range(0), 6));
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(represent(inputs[i++ % inputs.size()]));
}
BENCHMARK(BM_RepresentRandom)->Arg(13)->Arg(97)->Arg(541);

static void BM_VerifyExample(benchmark::State& state) {
    const auto m = factor(39330), n = factor(55836);
    const auto r = parse_rational("19/47");
    for (auto _ : state) benchmark::DoNotOptimize(verify(m, n, r));
}
BENCHMARK(BM_VerifyExample);

static void BM_PhiSquareSequence(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(phi_square_sequence(state.range(0)));
}
BENCHMARK(BM_PhiSquareSequence)->Arg(10'000)->Arg(1'000'000);

static void BM_BruteForceMinimal(benchmark::State& state) {
    const auto r = parse_rational("7/10");
    for (auto _ : state) benchmark::DoNotOptimize(brute_force_minimal(r, state.range(0)));
}
BENCHMARK(BM_BruteForceMinimal)->Arg(200)->Arg(2000);

BENCHMARK_MAIN();
