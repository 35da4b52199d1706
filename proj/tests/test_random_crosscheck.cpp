// Randomized equivalence suite: the analytic pipeline (iteration bound,
// LFPS test, kernel-counting census) against full phase-space enumeration.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <zqdyn/phase_graph.hpp>

#include "test_util.hpp"

using namespace zqdyn;
using testutil::random_matrix;

TEST_CASE("200 random systems agree with the oracle") {
    std::mt19937_64 rng(20240811);
    int done = 0;
    while (done < 200) {
        const u64 q = 2 + rng() % 11;       // q in [2, 12]
        const std::size_t n = 1 + rng() % 3;  // n in [1, 3]
        BigInt states = 1;
        for (std::size_t i = 0; i < n; ++i) states *= q;
        if (states > 4096) continue;
        const MatrixZq a = random_matrix(rng, Zq(q), n, n);
        const CrosscheckReport r = oracle_crosscheck(a);
        CHECK(r.pass);
        if (!r.pass) {
            for (const auto& m : r.mismatches) MESSAGE(m);
        }
        ++done;
    }
}

TEST_CASE("random product systems over Z_4 x Z_3 agree with the oracle") {
    std::mt19937_64 rng(4711);
    const RingSpec ring({4, 3});
    const Zq z4(4), z3(3);
    for (int trial = 0; trial < 50; ++trial) {
        const ProductSystem sys(ring, {random_matrix(rng, z4, 2, 2), random_matrix(rng, z3, 2, 2)});
        const CrosscheckReport r = oracle_crosscheck(sys);
        CHECK(r.state_count == 144);
        CHECK(r.pass);
        if (!r.pass) {
            for (const auto& m : r.mismatches) MESSAGE(m);
        }
    }
}
