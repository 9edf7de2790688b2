#include <benchmark/benchmark.h>

#include "fcable/solver1d.hpp"
#include "fcable/solver2d.hpp"
#include "fcable/study.hpp"
#include "fcable/weights.hpp"

namespace {

void BM_WeightsRecurrence(benchmark::State& state) {
    const std::size_t n = state.range(0);
    for (auto _ : state) {
        auto w = fcable::midpoint_weights_recurrence(0.5, n);
        benchmark::DoNotOptimize(w.weights.data());
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_WeightsRecurrence)->Range(64, 16384)->Complexity();

void BM_WeightsConvolution(benchmark::State& state) {
    const std::size_t n = state.range(0);
    for (auto _ : state) {
        auto w = fcable::midpoint_weights_direct(0.5, n);
        benchmark::DoNotOptimize(w.weights.data());
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_WeightsConvolution)->Range(64, 2048)->Complexity();

void BM_Solve1D(benchmark::State& state) {
    const int n = state.range(0);
    auto p = fcable::example2_problem(0.5, 0.5);
    for (auto _ : state) {
        auto sol = fcable::solve_1d(p, n, 25);
        benchmark::DoNotOptimize(sol.states.back().values.data());
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_Solve1D)->Range(16, 512)->Complexity();

void BM_Solve2D(benchmark::State& state) {
    const int n = state.range(0);
    auto p = fcable::example3_problem(0.5, 0.5);
    for (auto _ : state) {
        auto sol = fcable::solve_2d(p, n, 25, 25);
        benchmark::DoNotOptimize(sol.states.back().values.data());
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_Solve2D)->Range(16, 128)->Complexity();

void BM_FactoredSolve(benchmark::State& state) {
    const int m = state.range(0);
    fcable::Grid1D g{1.0, m};
    auto rhs = fcable::Field2D::zeros(g, g);
    auto bnd = fcable::Field2D::zeros(g, g);
    for (int i = 1; i < m; ++i)
        for (int j = 1; j < m; ++j) rhs.at(i, j) = 1.0 / (1 + i + j);
    for (auto _ : state) {
        auto u = fcable::factored_compact_solve(rhs, bnd);
        benchmark::DoNotOptimize(u.values.data());
    }
    state.SetComplexityN(m);
}
BENCHMARK(BM_FactoredSolve)->Range(16, 256)->Complexity();

}  // namespace

BENCHMARK_MAIN();
