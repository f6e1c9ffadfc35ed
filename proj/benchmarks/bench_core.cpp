#include <benchmark/benchmark.h>

#include "halfstat/engine.hpp"
#include "halfstat/random.hpp"

using namespace halfstat;

static void BM_Kron(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    std::mt19937_64 rng(7);
    const auto u = random_unitary(d, rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(kron(u.matrix(), u.matrix()));
}
BENCHMARK(BM_Kron)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

static void BM_BlockForm(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    std::mt19937_64 rng(7);
    const auto u2 = lift(random_unitary(d, rng));
    const auto bm = basis_map(d);
    for (auto _ : state)
        benchmark::DoNotOptimize(to_block_form(u2, bm));
}
BENCHMARK(BM_BlockForm)->Arg(2)->Arg(4)->Arg(8);

static void BM_Expectation(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    std::mt19937_64 rng(7);
    const auto u = random_unitary(d, rng);
    const auto obs = ObservableSpec::pair_prob(1, d);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            expectation(u, {1, 2, Statistics::Boson}, obs));
}
BENCHMARK(BM_Expectation)->Arg(2)->Arg(4)->Arg(8);

static void BM_VerifyIdentity(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    std::mt19937_64 rng(7);
    const auto u = random_unitary(d, rng);
    const auto obs =
        ObservableSpec::custom_op(random_invariant_hermitian(d, rng));
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_half_identity(u, 1, 2, obs, 1e-8));
}
BENCHMARK(BM_VerifyIdentity)->Arg(2)->Arg(4)->Arg(6);

BENCHMARK_MAIN();
