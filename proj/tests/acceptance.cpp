// Acceptance suite: the project's exit criteria, one per runner below.
// Each run prints a single PASS/FAIL line (plus details on failure).
// Usage: acceptance [N]  — run criterion N only, or all of them.
//
// Run in a Release build; A1-A4 carry 1 s budgets, A5 30 s, A8 10 s.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <zqdyn/analysis.hpp>
#include <zqdyn/phase_graph.hpp>
#include <zqdyn/product.hpp>

#include "test_util.hpp"

using namespace zqdyn;
using testutil::random_matrix;

namespace {

struct Check {
    std::string name;
    bool pass;
};

struct Context {
    std::vector<Check> checks;

    void expect(const std::string& name, bool ok) { checks.push_back(Check{name, ok}); }

    template <typename A, typename B>
    void expect_eq(const std::string& name, const A& got, const B& want) {
        std::ostringstream os;
        const bool ok = got == want;
        os << name;
        if (!ok) os << " (got " << got << ", want " << want << ")";
        checks.push_back(Check{os.str(), ok});
    }
};

MatrixZq nilpotent_mod8() { return MatrixZq::from_rows(Zq(8), {{2, 6}, {1, 0}}); }

MatrixZq fixed_point_mod16() {
    return MatrixZq::from_rows(Zq(16),
                               {{15, 7, 7, 1}, {0, 7, 11, 7}, {7, 7, 7, 11}, {14, 8, 15, 6}});
}

MatrixZq fixed_point_mod45() {
    return MatrixZq::from_rows(Zq(45),
                               {{36, 23, 32, 9}, {27, 32, 30, 25}, {32, 25, 13, 28}, {32, 8, 41, 40}});
}

MatrixZq invertible_mod105() {
    return MatrixZq::from_rows(
        Zq(105), {{70, 27, 5, 26}, {35, 98, 104, 99}, {81, 85, 78, 102}, {27, 97, 13, 69}});
}

// A1: the 2x2 nilpotent system over Z_8.
void a1(Context& c) {
    const MatrixZq a = nilpotent_mod8();
    c.expect("A^5 != 0", !mat_pow(a, u64(5)).is_zero());
    c.expect("A^6 == 0", mat_pow(a, u64(6)).is_zero());
    c.expect("charpoly = x^2 + 6x + 2",
             charpoly_berkowitz(a).coeffs() == std::vector<u64>{2, 6, 1});
    const PolyZq ch(Zq(8), {2, 6, 1});
    const PolyZq co(Zq(8), {4, 0, 2, 2, 1});
    c.expect("(x^2+6x+2)(x^4+2x^3+2x^2+4) = x^6 mod 8",
             poly_mul(ch, co).coeffs() == std::vector<u64>{0, 0, 0, 0, 0, 0, 1});
    c.expect("lfps_test = true", lfps_test(a));
    const PhaseGraph g = enumerate_phase_graph(a);
    c.expect("oracle: unique fixed point 0", g.fixed_points == std::vector<u64>{0});
    c.expect("oracle: single 1-cycle", g.cycle_census == std::map<u64, u64>{{1, 1}});
    c.expect_eq("oracle: max tail", g.max_tail_length, u64(6));
}

// A2: the 4x4 fixed point system over Z_16.
void a2(Context& c) {
    const MatrixZq a = fixed_point_mod16();
    c.expect_eq("bound B", iteration_bound(4, RingSpec({16})), u64(16));
    c.expect("lfps_test = true", lfps_test(a));
    const MatrixZq p16 = mat_pow(a, u64(16));
    const MatrixZq expected = MatrixZq::from_rows(
        Zq(16), {{12, 1, 2, 11}, {0, 4, 8, 12}, {4, 3, 6, 1}, {12, 1, 2, 11}});
    c.expect("A^16 equals the stabilized matrix", p16 == expected);
    c.expect("A^16 == A^17", mat_pow(a, u64(17)) == p16);
}

// A3: the 4x4 fixed point system over Z_45.
void a3(Context& c) {
    const MatrixZq a = fixed_point_mod45();
    c.expect_eq("minimal fixed exponent", minimal_fixed_exponent(a).value_or(u64(-1)), u64(6));
    const MatrixZq expected = MatrixZq::from_rows(
        Zq(45), {{0, 9, 9, 27}, {10, 27, 12, 26}, {35, 18, 33, 19}, {5, 27, 42, 31}});
    const MatrixZq p22 = mat_pow(a, u64(22));
    c.expect("A^22 equals the stabilized matrix", p22 == expected);
    c.expect("A^22 == A^24", mat_pow(a, u64(24)) == p22);
}

// A4: the invertible 4x4 system over Z_105.
void a4(Context& c) {
    const MatrixZq a = invertible_mod105();
    c.expect_eq("det", determinant(a).value(), u64(2));
    c.expect("shortcut says not a fixed point system",
             unit_det_shortcut(a) == ShortcutVerdict::NotFixedPoint);

    const u64 t = eventual_period(a);
    c.expect_eq("eventual period", t, u64(24));
    c.expect("A^24 == I", mat_pow(a, u64(24)).is_identity());
    bool proper = true;
    for (u64 k = 1; k < 24; ++k) proper &= !mat_pow(a, k).is_identity();
    c.expect("A^k != I for 0 < k < 24", proper);

    // Reference cycle table as originally specified for this example:
    // C_1 = 1, C_2 = 5512, C_24 = 5064150, every other divisor 0. Those
    // counts are internally inconsistent for this matrix — (15,30,0,30) is
    // a nonzero fixed point, so C_1 is 105, and every divisor of 24 occurs
    // (see "census over Z_105: verified counts" in test_analysis.cpp, cross-
    // derived per prime factor in the crosscheck suite). The reference
    // values are asserted as stated rather than silently corrected.
    const CycleStructure cs = cycle_structure(a);
    BigInt weighted = 0;
    for (const PeriodClass& pc : cs.classes) {
        weighted += BigInt(pc.k) * pc.cycles;
        BigInt want = 0;
        if (pc.k == 1) want = 1;
        if (pc.k == 2) want = 5512;
        if (pc.k == 24) want = BigInt("5064150");
        std::ostringstream name;
        name << "C_" << pc.k;
        c.expect_eq(name.str(), pc.cycles, want);
    }
    c.expect("sum k*C_k = 105^4 = 121550625", weighted == BigInt("121550625"));
}

// A5: randomized oracle equivalence.
void a5(Context& c) {
    std::mt19937_64 rng(501);
    int done = 0, failures = 0;
    while (done < 200) {
        const u64 q = 2 + rng() % 11;
        const std::size_t n = 1 + rng() % 3;
        BigInt states = 1;
        for (std::size_t i = 0; i < n; ++i) states *= q;
        if (states > 4096) continue;
        const MatrixZq a = random_matrix(rng, Zq(q), n, n);
        if (!oracle_crosscheck(a).pass) ++failures;
        ++done;
    }
    c.expect_eq("crosscheck failures over 200 random systems", failures, 0);
}

// A6: image-chain properties on a randomized corpus.
void a6(Context& c) {
    std::mt19937_64 rng(501);  // the A5 corpus
    int bad = 0, done = 0;
    while (done < 200) {
        const u64 q = 2 + rng() % 11;
        const std::size_t n = 1 + rng() % 3;
        BigInt states = 1;
        for (std::size_t i = 0; i < n; ++i) states *= q;
        if (states > 4096) continue;
        const MatrixZq a = random_matrix(rng, Zq(q), n, n);
        const std::vector<BigInt> chain = image_chain(a);
        bool ok = chain.size() <= iteration_bound(n, RingSpec({q})) + 1;
        for (std::size_t i = 1; i < chain.size(); ++i)
            ok &= chain[i] < chain[i - 1] && chain[i - 1] % chain[i] == 0;
        if (!ok) ++bad;
        ++done;
    }
    c.expect_eq("chain violations (general rings)", bad, 0);

    const std::vector<u64> primes{2, 3, 5, 7, 11, 13};
    bad = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const u64 p = primes[rng() % primes.size()];
        const std::size_t n = 1 + rng() % 4;
        const MatrixZq a = random_matrix(rng, Zq(p), n, n);
        if (image_chain(a).size() > n + 1) ++bad;
    }
    c.expect_eq("chain violations (prime fields, within n steps)", bad, 0);
}

// A7: bijective systems are fixed point systems only when A = I.
void a7(Context& c) {
    std::mt19937_64 rng(701);
    int done = 0, bad = 0;
    while (done < 100) {
        const Zq z(2 + rng() % 30);
        const std::size_t n = 1 + rng() % 3;
        const MatrixZq a = random_matrix(rng, z, n, n);
        if (!z.is_unit(determinant(a).value())) continue;
        if (lfps_test(a) != a.is_identity()) ++bad;
        ++done;
    }
    c.expect_eq("violations over 100 unit-determinant systems", bad, 0);
    c.expect("identity passes", lfps_test(MatrixZq::identity(Zq(12), 3)));
}

// A8: performance sanity on a 256x256 system over a large prime modulus.
void a8(Context& c) {
    std::mt19937_64 rng(801);
    const Zq z((u64(1) << 31) - 1);
    const MatrixZq a = random_matrix(rng, z, 256, 256);
    c.expect_eq("bound", iteration_bound(256, RingSpec({z.modulus()})), u64(7936));
    const auto start = std::chrono::steady_clock::now();
    const bool verdict = lfps_test(a);
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    std::ostringstream name;
    name << "lfps_test on 256x256 returned " << (verdict ? "true" : "false") << " in "
         << static_cast<long>(ms) << " ms (< 10 s)";
    c.expect(name.str(), ms < 10000.0);
}

// A9: componentwise product-ring analysis against the direct oracle.
void a9(Context& c) {
    std::mt19937_64 rng(901);
    const RingSpec ring({4, 3});
    const Zq z4(4), z3(3);
    int bad = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const ProductSystem sys(ring,
                                {random_matrix(rng, z4, 2, 2), random_matrix(rng, z3, 2, 2)});
        const CrosscheckReport r = oracle_crosscheck(sys);
        if (!r.pass || r.state_count != 144) ++bad;
    }
    c.expect_eq("violations over 50 product systems", bad, 0);
}

struct Criterion {
    int id;
    std::string title;
    double budget_ms;
    std::function<void(Context&)> run;
};

const std::vector<Criterion> kCriteria{
    {1, "nilpotent 2x2 over Z_8 reproduces all worked values", 1000, a1},
    {2, "fixed point 4x4 over Z_16 stabilizes at A^16", 1000, a2},
    {3, "fixed point 4x4 over Z_45: minimal exponent 6, A^22 = A^24", 1000, a3},
    {4, "invertible 4x4 over Z_105: det, period and reference cycle table", 1000, a4},
    {5, "oracle equivalence on 200 randomized systems", 30000, a5},
    {6, "image-chain stabilization properties", 60000, a6},
    {7, "unit-determinant systems: fixed point iff identity", 60000, a7},
    {8, "lfps_test on 256x256 over Z_(2^31-1) under 10 s", 10000, a8},
    {9, "product-ring analysis matches the direct oracle", 60000, a9},
};

bool run_criterion(const Criterion& cr) {
    Context ctx;
    const auto start = std::chrono::steady_clock::now();
    cr.run(ctx);
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();

    bool pass = ms < cr.budget_ms;
    for (const Check& ch : ctx.checks) pass &= ch.pass;

    std::cout << "A" << cr.id << " " << (pass ? "PASS" : "FAIL") << " - " << cr.title << " ["
              << static_cast<long>(ms) << " ms]\n";
    if (ms >= cr.budget_ms)
        std::cout << "    over budget: " << ms << " ms >= " << cr.budget_ms << " ms\n";
    for (const Check& ch : ctx.checks)
        if (!ch.pass) std::cout << "    failed: " << ch.name << "\n";
    return pass;
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    if (argc > 1) only = std::atoi(argv[1]);

    bool all_pass = true;
    int ran = 0;
    for (const Criterion& cr : kCriteria) {
        if (only != 0 && cr.id != only) continue;
        ++ran;
        all_pass &= run_criterion(cr);
    }
    if (ran == 0) {
        std::cerr << "no such criterion: " << only << "\n";
        return 2;
    }
    return all_pass ? 0 : 1;
}
