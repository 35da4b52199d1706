#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include <zqdyn/howell.hpp>

#include "test_util.hpp"

using namespace zqdyn;
using testutil::brute_kernel;
using testutil::next_vector;
using testutil::random_matrix;
using testutil::row_span_set;

namespace {

MatrixZq nilpotent_mod8() { return MatrixZq::from_rows(Zq(8), {{2, 6}, {1, 0}}); }

// Check every HowellForm invariant that does not need enumeration.
void check_form_invariants(const HowellForm& h, u64 q) {
    std::size_t prev_col = 0;
    bool first = true;
    for (const HowellPivot& p : h.pivots) {
        if (!first) CHECK(p.col > prev_col);
        first = false;
        prev_col = p.col;
        CHECK(p.value > 0);
        CHECK(q % p.value == 0);
        CHECK(h.matrix.at(p.row, p.col) == p.value);
        for (std::size_t j = 0; j < p.col; ++j) CHECK(h.matrix.at(p.row, j) == 0);
        for (std::size_t r = 0; r < p.row; ++r) CHECK(h.matrix.at(r, p.col) < p.value);
    }
    for (std::size_t r = h.pivots.size(); r < h.matrix.rows(); ++r)
        for (std::size_t j = 0; j < h.matrix.cols(); ++j) CHECK(h.matrix.at(r, j) == 0);
}

}  // namespace

TEST_CASE("identity is its own Howell form") {
    const Zq z8(8);
    const MatrixZq id = MatrixZq::identity(z8, 3);
    const HowellForm h = howell_form(id);
    CHECK(h.matrix == id);
    CHECK(h.span_size == 512);  // q^n
    CHECK(h.pivots.size() == 3);
}

TEST_CASE("single row (2) over Z_4") {
    const HowellForm h = howell_form(MatrixZq::from_rows(Zq(4), {{2}}));
    REQUIRE(h.pivots.size() == 1);
    CHECK(h.pivots[0].value == 2);
    CHECK(h.span_size == 2);  // {0, 2}
}

TEST_CASE("single row (2,1) over Z_4 needs a second generator") {
    const HowellForm h = howell_form(MatrixZq::from_rows(Zq(4), {{2, 1}}));
    CHECK(h.matrix == MatrixZq::from_rows(Zq(4), {{2, 1}, {0, 2}}));
    CHECK(h.span_size == 4);
    // the span is exactly the 4-element subgroup generated by (2,1)
    const auto span = row_span_set(h.matrix);
    CHECK(span == std::set<std::vector<u64>>{{0, 0}, {2, 1}, {0, 2}, {2, 3}});
}

TEST_CASE("zero matrix has a trivial span") {
    const HowellForm h = howell_form(MatrixZq(Zq(6), 3, 2));
    CHECK(h.pivots.empty());
    CHECK(h.span_size == 1);
    CHECK(h.matrix.is_zero());
}

TEST_CASE("kernel sizes") {
    CHECK(kernel_size(MatrixZq::identity(Zq(8), 3)) == 1);
    CHECK(kernel_size(MatrixZq(Zq(6), 2, 2)) == 36);  // everything mod 6
    CHECK(kernel_size(nilpotent_mod8()) == 2);
}

TEST_CASE("kernel of the mod-8 system by enumeration") {
    const MatrixZq a = nilpotent_mod8();
    const auto ker = brute_kernel(a);
    CHECK(ker == std::set<std::vector<u64>>{{0, 0}, {0, 4}});
    CHECK(kernel_size(a) == BigInt(ker.size()));

    const auto gens = kernel_generators(a);
    REQUIRE_FALSE(gens.empty());
    MatrixZq g(a.ring(), gens.size(), 2);
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = 0; j < 2; ++j) g.set_canonical(i, j, gens[i][j]);
    CHECK(row_span_set(g) == ker);
}

TEST_CASE("kernel generators of the identity are empty") {
    CHECK(kernel_generators(MatrixZq::identity(Zq(12), 3)).empty());
}

TEST_CASE("kernel generators span the brute-force kernel mod 12") {
    std::mt19937_64 rng(2024);
    const Zq z12(12);
    for (int trial = 0; trial < 20; ++trial) {
        const MatrixZq m = random_matrix(rng, z12, 3, 3);
        const auto ker = brute_kernel(m);
        const auto gens = kernel_generators(m);
        CHECK(kernel_size(m) == BigInt(ker.size()));
        for (const auto& g : gens) {
            const auto y = m.apply(g);
            for (u64 v : y) CHECK(v == 0);
        }
        if (gens.empty()) {
            CHECK(ker.size() == 1);
        } else {
            MatrixZq gm(z12, gens.size(), 3);
            for (std::size_t i = 0; i < gens.size(); ++i)
                for (std::size_t j = 0; j < 3; ++j) gm.set_canonical(i, j, gens[i][j]);
            CHECK(row_span_set(gm) == ker);
        }
    }
}

TEST_CASE("kernel and column span sizes multiply to q^n") {
    std::mt19937_64 rng(555);
    for (int trial = 0; trial < 50; ++trial) {
        const u64 q = 2 + rng() % 30;
        const std::size_t n = 1 + rng() % 4;
        const MatrixZq m = random_matrix(rng, Zq(q), n, n);
        BigInt total = 1;
        for (std::size_t i = 0; i < n; ++i) total *= q;
        CHECK(kernel_size(m) * column_span_size(m) == total);
    }
}

TEST_CASE("Howell form is canonical") {
    std::mt19937_64 rng(808);
    for (int trial = 0; trial < 60; ++trial) {
        const u64 q = 2 + rng() % 30;
        const std::size_t rows = 1 + rng() % 4;
        const std::size_t cols = 1 + rng() % 4;
        const MatrixZq m = random_matrix(rng, Zq(q), rows, cols);
        const HowellForm h = howell_form(m);
        check_form_invariants(h, q);
        // fixpoint: applying the reduction to the form returns it unchanged
        const HowellForm h2 = howell_form(h.matrix);
        CHECK(h2.matrix == h.matrix);
        CHECK(h2.span_size == h.span_size);
    }
}

TEST_CASE("row span and the Howell property, by enumeration") {
    std::mt19937_64 rng(909);
    for (int trial = 0; trial < 25; ++trial) {
        const u64 q = 2 + rng() % 7;  // q <= 8
        const std::size_t rows = 1 + rng() % 3;
        const std::size_t cols = 1 + rng() % 3;
        const MatrixZq m = random_matrix(rng, Zq(q), rows, cols);
        const HowellForm h = howell_form(m);

        const auto span = row_span_set(m);
        CHECK(row_span_set(h.matrix) == span);
        CHECK(h.span_size == BigInt(span.size()));

        // every span vector with leading column j lies in the span of the
        // rows whose pivots sit at column j or later
        for (const auto& v : span) {
            std::size_t lead = cols;
            for (std::size_t j = 0; j < cols; ++j) {
                if (v[j]) {
                    lead = j;
                    break;
                }
            }
            if (lead == cols) continue;  // zero vector
            std::vector<std::vector<long long>> suffix;
            for (const HowellPivot& p : h.pivots) {
                if (p.col < lead) continue;
                std::vector<long long> row;
                for (std::size_t j = 0; j < cols; ++j)
                    row.push_back(static_cast<long long>(h.matrix.at(p.row, j)));
                suffix.push_back(std::move(row));
            }
            REQUIRE_FALSE(suffix.empty());
            const auto sub = row_span_set(MatrixZq::from_rows(Zq(q), suffix));
            CHECK(sub.count(v) == 1);
        }
    }
}

TEST_CASE("rectangular inputs") {
    std::mt19937_64 rng(1212);
    for (int trial = 0; trial < 20; ++trial) {
        const u64 q = 2 + rng() % 7;
        const MatrixZq wide = random_matrix(rng, Zq(q), 2, 4);
        const MatrixZq tall = random_matrix(rng, Zq(q), 4, 2);
        CHECK(row_span_set(howell_form(wide).matrix) == row_span_set(wide));
        CHECK(row_span_set(howell_form(tall).matrix) == row_span_set(tall));
        // kernel count holds for non-square shapes too
        CHECK(kernel_size(tall) == BigInt(brute_kernel(tall).size()));
        CHECK(kernel_size(wide) == BigInt(brute_kernel(wide).size()));
    }
}
