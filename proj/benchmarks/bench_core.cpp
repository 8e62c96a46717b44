#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include <symdet/combinat.hpp>
#include <symdet/gf.hpp>
#include <symdet/guard.hpp>
#include <symdet/krawtchouk.hpp>
#include <symdet/oracle.hpp>
#include <symdet/qnumbers.hpp>
#include <symdet/symmat.hpp>
#include <symdet/weights.hpp>

using namespace symdet;

namespace {

std::vector<Felem> random_elements(const Field& f, size_t n, uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<uint64_t> pick(0, f.q() - 1);
    std::vector<Felem> out(n);
    for (auto& v : out) v = f.element(pick(rng));
    return out;
}

void BM_FieldMul(benchmark::State& state) {
    Field f = Field::from_order(27);
    auto xs = random_elements(f, 1024, 1);
    size_t i = 0;
    for (auto _ : state) {
        Felem a = xs[i & 1023], b = xs[(i + 1) & 1023];
        benchmark::DoNotOptimize(f.mul(a, b));
        ++i;
    }
}
BENCHMARK(BM_FieldMul);

void BM_FieldInv(benchmark::State& state) {
    Field f = Field::from_order(27);
    auto xs = random_elements(f, 1024, 2);
    for (auto& v : xs)
        if (v == f.zero()) v = f.one();
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(f.inv(xs[i & 1023]));
        ++i;
    }
}
BENCHMARK(BM_FieldInv);

void BM_TracePair(benchmark::State& state) {
    Field f(5, 1);
    int m = (int)state.range(0);
    auto ua = random_elements(f, (size_t)m * (m + 1) / 2, 3);
    auto ub = random_elements(f, (size_t)m * (m + 1) / 2, 4);
    SymMatrix A = sym_from_upper(m, ua), B = sym_from_upper(m, ub);
    for (auto _ : state) benchmark::DoNotOptimize(trace_pair(f, A, B));
}
BENCHMARK(BM_TracePair)->Arg(4)->Arg(8)->Arg(16);

void BM_RankType(benchmark::State& state) {
    Field f = Field::from_order(9);
    int m = (int)state.range(0);
    auto upper = random_elements(f, (size_t)m * (m + 1) / 2, 5);
    SymMatrix A = sym_from_upper(m, upper);
    for (auto _ : state) benchmark::DoNotOptimize(rank_type(f, A));
}
BENCHMARK(BM_RankType)->Arg(4)->Arg(8)->Arg(16);

void BM_KrawF25(benchmark::State& state) {
    Field f = Field::from_order(25);
    for (auto _ : state) benchmark::DoNotOptimize(kraw_F(f, 14, 7, 3));
}
BENCHMARK(BM_KrawF25);

void BM_QNumber(benchmark::State& state) {
    Field f = Field::from_order(9);
    for (auto _ : state)
        benchmark::DoNotOptimize(q_number(f, 10, {6, -1}, {7, 0}));
}
BENCHMARK(BM_QNumber);

void BM_WeightDistribution(benchmark::State& state) {
    Field f = Field::from_order(9);
    int m = (int)state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(weight_distribution(f, m, m / 2 + 1));
}
BENCHMARK(BM_WeightDistribution)->Arg(6)->Arg(10)->Arg(14);

void BM_Census(benchmark::State& state) {
    Field f(3, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(census(f, 3, GuardPolicy{}));
}
BENCHMARK(BM_Census);

void BM_BruteWeightTableRep(benchmark::State& state) {
    Field f(3, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            brute_weight_table(f, 3, 2, BruteMode::representative,
                               GuardPolicy{}));
}
BENCHMARK(BM_BruteWeightTableRep);

}  // namespace

BENCHMARK_MAIN();
