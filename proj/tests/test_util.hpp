#pragma once

// Shared helpers for the test suites: deterministic random inputs and the
// small brute-force oracles the analytic paths are checked against.

#include <random>
#include <set>
#include <vector>

#include <zqdyn/howell.hpp>
#include <zqdyn/matrix.hpp>

namespace testutil {

using zqdyn::MatrixZq;
using zqdyn::PolyZq;
using zqdyn::Zq;
using zqdyn::u64;

inline MatrixZq random_matrix(std::mt19937_64& rng, const Zq& ring, std::size_t rows,
                              std::size_t cols) {
    std::uniform_int_distribution<u64> dist(0, ring.modulus() - 1);
    MatrixZq m(ring, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.set_canonical(i, j, dist(rng));
    return m;
}

// Advance v through Z_q^n in mixed-radix order; false once wrapped.
inline bool next_vector(std::vector<u64>& v, u64 q) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (++v[i] < q) return true;
        v[i] = 0;
    }
    return false;
}

// All Z_q-combinations of the rows of m. Exponential; tiny inputs only.
inline std::set<std::vector<u64>> row_span_set(const MatrixZq& m) {
    const u64 q = m.ring().modulus();
    std::set<std::vector<u64>> span;
    std::vector<u64> coeff(m.rows(), 0);
    do {
        std::vector<u64> v(m.cols(), 0);
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t j = 0; j < m.cols(); ++j)
                v[j] = m.ring().add(v[j], m.ring().mul(coeff[r], m.at(r, j)));
        span.insert(std::move(v));
    } while (next_vector(coeff, q));
    return span;
}

// { x : Mx = 0 } by enumeration of Z_q^cols.
inline std::set<std::vector<u64>> brute_kernel(const MatrixZq& m) {
    const u64 q = m.ring().modulus();
    std::set<std::vector<u64>> ker;
    std::vector<u64> x(m.cols(), 0);
    do {
        const std::vector<u64> y = m.apply(x);
        bool zero = true;
        for (u64 v : y) zero &= v == 0;
        if (zero) ker.insert(x);
    } while (next_vector(x, q));
    return ker;
}

// det(xI - A) by first-row cofactor expansion over PolyZq; the independent
// reference for the division-free implementation.
inline PolyZq poly_det(const std::vector<std::vector<PolyZq>>& m, const Zq& ring) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    PolyZq det(ring);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<PolyZq>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<PolyZq> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        PolyZq term = m[0][j] * poly_det(minor, ring);
        det = (j % 2 == 0) ? det + term : det - term;
    }
    return det;
}

inline PolyZq charpoly_cofactor(const MatrixZq& a) {
    const Zq ring = a.ring();
    const std::size_t n = a.rows();
    std::vector<std::vector<PolyZq>> m(n, std::vector<PolyZq>(n, PolyZq(ring)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<long long> coeffs{-static_cast<long long>(a.at(i, j)),
                                          i == j ? 1ll : 0ll};
            m[i][j] = PolyZq(ring, coeffs);
        }
    }
    return poly_det(m, ring);
}

}  // namespace testutil
