#include <benchmark/benchmark.h>

#include <random>

#include <zqdyn/analysis.hpp>
#include <zqdyn/matrix.hpp>

using namespace zqdyn;

namespace {

MatrixZq random_matrix(std::mt19937_64& rng, const Zq& ring, std::size_t n) {
    std::uniform_int_distribution<u64> dist(0, ring.modulus() - 1);
    MatrixZq m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.set_canonical(i, j, dist(rng));
    return m;
}

void BM_MatMul(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const Zq z((u64(1) << 31) - 1);
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const MatrixZq a = random_matrix(rng, z, n);
    const MatrixZq b = random_matrix(rng, z, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mat_mul(a, b));
    }
}
BENCHMARK(BM_MatMul)->Arg(64)->Arg(128)->Arg(256);

// Wide-modulus path: every term needs a 128-bit reduction.
void BM_MatMulWideModulus(benchmark::State& state) {
    std::mt19937_64 rng(2);
    const Zq z((u64(1) << 62) - 57);
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const MatrixZq a = random_matrix(rng, z, n);
    const MatrixZq b = random_matrix(rng, z, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mat_mul(a, b));
    }
}
BENCHMARK(BM_MatMulWideModulus)->Arg(64)->Arg(128);

void BM_MatPowBoundExponent(benchmark::State& state) {
    std::mt19937_64 rng(3);
    const Zq z((u64(1) << 31) - 1);
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const MatrixZq a = random_matrix(rng, z, n);
    const u64 b = iteration_bound(n, RingSpec({z.modulus()}));
    for (auto _ : state) {
        benchmark::DoNotOptimize(mat_pow(a, b));
    }
}
BENCHMARK(BM_MatPowBoundExponent)->Arg(64)->Arg(128)->Arg(256);

void BM_LfpsTest256(benchmark::State& state) {
    std::mt19937_64 rng(4);
    const Zq z((u64(1) << 31) - 1);
    const MatrixZq a = random_matrix(rng, z, 256);
    for (auto _ : state) {
        benchmark::DoNotOptimize(lfps_test(a));
    }
}
BENCHMARK(BM_LfpsTest256)->Unit(benchmark::kMillisecond);

void BM_Charpoly(benchmark::State& state) {
    std::mt19937_64 rng(5);
    const Zq z(105);
    const MatrixZq a = random_matrix(rng, z, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(charpoly_berkowitz(a));
    }
}
BENCHMARK(BM_Charpoly)->Arg(16)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
