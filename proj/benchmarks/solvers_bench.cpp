#include <benchmark/benchmark.h>

#include <string>

#include "maxcut/baselines.hpp"
#include "maxcut/exact.hpp"
#include "maxcut/generators.hpp"
#include "maxcut/io.hpp"
#include "maxcut/stabilizer.hpp"
#include "maxcut/tsplib.hpp"

using namespace maxcut;

namespace {

WeightMatrix complete(benchmark::State &state) {
    return randomIntegerGraph(static_cast<std::size_t>(state.range(0)), 1, 1000, 42);
}

// Naive engine is cubic; sorted engine rescans only the folded row.
void BM_StabilizerNaive(benchmark::State &state) {
    const auto w = complete(state);
    StabilizerPolicy p;
    p.engine = StabilizerEngine::Naive;
    for (auto _ : state) {
        benchmark::DoNotOptimize(stabilizerSolve(w, p));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_StabilizerNaive)->RangeMultiplier(2)->Range(32, 512)->Complexity()->Unit(benchmark::kMillisecond);

void BM_StabilizerSorted(benchmark::State &state) {
    const auto w = complete(state);
    for (auto _ : state) {
        benchmark::DoNotOptimize(stabilizerSolve(w));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_StabilizerSorted)->RangeMultiplier(2)->Range(32, 1024)->Complexity()->Unit(benchmark::kMillisecond);

void BM_StabilizerReal(benchmark::State &state) {
    const auto w = randomRealGraph(static_cast<std::size_t>(state.range(0)), -1.0, 1.0, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(stabilizerSolve(w));
    }
}
BENCHMARK(BM_StabilizerReal)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_Ec(benchmark::State &state) {
    const auto w = complete(state);
    for (auto _ : state) {
        benchmark::DoNotOptimize(ecSolve(w));
    }
}
BENCHMARK(BM_Ec)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_Dec(benchmark::State &state) {
    const auto w = complete(state);
    for (auto _ : state) {
        benchmark::DoNotOptimize(decSolve(w));
    }
}
BENCHMARK(BM_Dec)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_Sg(benchmark::State &state) {
    const auto w = complete(state);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sgSolve(w));
    }
}
BENCHMARK(BM_Sg)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_Sg3(benchmark::State &state) {
    const auto w = complete(state);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sg3Solve(w));
    }
}
BENCHMARK(BM_Sg3)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_BruteForce(benchmark::State &state) {
    const auto w = complete(state);
    for (auto _ : state) {
        benchmark::DoNotOptimize(bruteForce(w));
    }
}
BENCHMARK(BM_BruteForce)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);

void BM_TsplibGr120(benchmark::State &state) {
    const auto text = readTextFile(std::string(MAXCUT_DATA_DIR) + "/tsplib/gr120.tsp");
    for (auto _ : state) {
        const auto w = toWeightMatrix(parseTsplib(text));
        benchmark::DoNotOptimize(stabilizerSolve(w));
    }
}
BENCHMARK(BM_TsplibGr120)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
