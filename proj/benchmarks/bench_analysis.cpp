#include <benchmark/benchmark.h>

#include <random>

#include <zqdyn/analysis.hpp>
#include <zqdyn/phase_graph.hpp>

using namespace zqdyn;

namespace {

MatrixZq invertible_mod105() {
    return MatrixZq::from_rows(
        Zq(105), {{70, 27, 5, 26}, {35, 98, 104, 99}, {81, 85, 78, 102}, {27, 97, 13, 69}});
}

void BM_HowellForm(benchmark::State& state) {
    std::mt19937_64 rng(6);
    const Zq z(105);
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    std::uniform_int_distribution<u64> dist(0, z.modulus() - 1);
    MatrixZq m(z, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.set_canonical(i, j, dist(rng));
    for (auto _ : state) {
        benchmark::DoNotOptimize(howell_form(m));
    }
}
BENCHMARK(BM_HowellForm)->Arg(8)->Arg(32);

void BM_CycleStructure105(benchmark::State& state) {
    const MatrixZq a = invertible_mod105();
    for (auto _ : state) {
        benchmark::DoNotOptimize(cycle_structure(a));
    }
}
BENCHMARK(BM_CycleStructure105);

void BM_PhaseGraph(benchmark::State& state) {
    // 32^3 = 32768 states
    std::mt19937_64 rng(7);
    const Zq z(32);
    std::uniform_int_distribution<u64> dist(0, 31);
    MatrixZq a(z, 3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) a.set_canonical(i, j, dist(rng));
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_phase_graph(a, 100000));
    }
}
BENCHMARK(BM_PhaseGraph);

}  // namespace
