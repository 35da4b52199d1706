#include <zqdyn/howell.hpp>

#include <algorithm>
#include <numeric>

namespace zqdyn {

using u128 = unsigned __int128;

namespace {

u64 signed_canonical(i64 v, u64 q) {
    i64 r = static_cast<i64>(v % static_cast<i64>(q));
    if (r < 0) r += static_cast<i64>(q);
    return static_cast<u64>(r);
}

// Largest divisor of n sharing no prime with x, by iterated gcd stripping.
u64 coprime_part(u64 n, u64 x) {
    u64 r = n;
    u64 g = std::gcd(r, x);
    while (g > 1) {
        r /= g;
        g = std::gcd(r, x);
    }
    return r;
}

// For a != 0 mod q: d = gcd(a, q) together with a unit u, u*a = d (mod q).
// u is lifted from (a/d)^{-1} mod (q/d) to a unit of Z_q with the coprime
// part trick, so no factorization of q is ever needed.
std::pair<u64, u64> canonical_divisor_unit(u64 a, u64 q) {
    const u64 d = std::gcd(a, q);
    const u64 a0 = a / d, q0 = q / d;
    const Xgcd e = xgcd(a0 % q0, q0);
    const u64 u0 = signed_canonical(e.x, q0);  // a0 * u0 = 1 (mod q0)
    const u64 c = coprime_part(q, u0);
    const u64 u = static_cast<u64>((u128(c) % q * (q0 % q) + u0) % q);
    return {d, u};
}

struct RowOps {
    u64 q;

    bool is_zero(const std::vector<u64>& r) const {
        return std::all_of(r.begin(), r.end(), [](u64 v) { return v == 0; });
    }
    // dst <- dst + f * src
    void axpy(std::vector<u64>& dst, u64 f, const std::vector<u64>& src) const {
        if (!f) return;
        for (std::size_t j = 0; j < dst.size(); ++j)
            dst[j] = static_cast<u64>((u128(f) * src[j] + dst[j]) % q);
    }
    void scale(std::vector<u64>& r, u64 f) const {
        for (u64& v : r) v = static_cast<u64>(u128(f) * v % q);
    }
    std::vector<u64> combine(u64 f1, const std::vector<u64>& r1, u64 f2,
                             const std::vector<u64>& r2) const {
        std::vector<u64> out(r1.size());
        for (std::size_t j = 0; j < r1.size(); ++j)
            out[j] = static_cast<u64>((u128(f1) * r1[j] + u128(f2) * r2[j]) % q);
        return out;
    }
};

// In-place echelonization with gcd transforms. Rows end up with strictly
// increasing pivot columns, pivot values normalized to divisors of q;
// zero rows are dropped. Returns the pivot list.
std::vector<HowellPivot> echelonize(std::vector<std::vector<u64>>& rows, std::size_t cols,
                                    const RowOps& ops) {
    const u64 q = ops.q;
    std::vector<HowellPivot> pivots;
    std::size_t top = 0;
    for (std::size_t c = 0; c < cols && top < rows.size(); ++c) {
        std::size_t sel = rows.size();
        for (std::size_t r = top; r < rows.size(); ++r) {
            if (rows[r][c]) {
                sel = r;
                break;
            }
        }
        if (sel == rows.size()) continue;
        std::swap(rows[top], rows[sel]);
        for (std::size_t r = top + 1; r < rows.size(); ++r) {
            const u64 a = rows[top][c];
            const u64 b = rows[r][c];
            if (!b) continue;
            if (b % a == 0) {
                // plain elimination: row_r -= (b/a) * row_top
                ops.axpy(rows[r], q - b / a, rows[top]);
            } else {
                // unimodular gcd transform: leaves gcd(a, b) at the pivot
                // and zero below, preserving the row module exactly.
                const Xgcd e = xgcd(a, b);
                const u64 s = signed_canonical(e.x, q);
                const u64 t = signed_canonical(e.y, q);
                const u64 adg = a / e.g;
                const u64 bdg = b / e.g;
                std::vector<u64> new_top = ops.combine(s, rows[top], t, rows[r]);
                std::vector<u64> new_r = ops.combine(q - bdg, rows[top], adg, rows[r]);
                rows[top] = std::move(new_top);
                rows[r] = std::move(new_r);
            }
        }
        auto [d, u] = canonical_divisor_unit(rows[top][c], q);
        if (u != 1) ops.scale(rows[top], u);
        pivots.push_back(HowellPivot{top, c, d});
        ++top;
    }
    rows.resize(top);
    return pivots;
}

// Reduce w against pivot rows wherever the pivot divides the entry.
// Returns true if w reduced to zero.
bool reduce_row(std::vector<u64>& w, const std::vector<std::vector<u64>>& rows,
                const std::vector<HowellPivot>& pivots, const RowOps& ops) {
    for (const HowellPivot& p : pivots) {
        const u64 t = w[p.col];
        if (!t) continue;
        if (t % p.value != 0) return false;  // new content at this column
        ops.axpy(w, ops.q - t / p.value, rows[p.row]);
    }
    return ops.is_zero(w);
}

}  // namespace

HowellForm howell_form(const MatrixZq& m) {
    const Zq ring = m.ring();
    const u64 q = ring.modulus();
    const std::size_t cols = m.cols();
    const RowOps ops{q};

    std::vector<std::vector<u64>> rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::vector<u64> r(m.row_data(i), m.row_data(i) + cols);
        if (!ops.is_zero(r)) rows.push_back(std::move(r));
    }

    // Echelonize, then close the span under multiplication by q/pivot:
    // (q/d) * row has a zero pivot and may carry content only reachable
    // through later columns (the Howell condition). Iterate to a fixpoint.
    std::vector<HowellPivot> pivots = echelonize(rows, cols, ops);
    for (;;) {
        std::vector<std::vector<u64>> fresh;
        for (const HowellPivot& p : pivots) {
            std::vector<u64> w = rows[p.row];
            ops.scale(w, (q / p.value) % q);  // unit pivots close trivially
            if (!reduce_row(w, rows, pivots, ops)) fresh.push_back(std::move(w));
        }
        if (fresh.empty()) break;
        for (auto& w : fresh) rows.push_back(std::move(w));
        pivots = echelonize(rows, cols, ops);
    }

    // Entries above each pivot reduced modulo the pivot value.
    for (const HowellPivot& p : pivots) {
        for (std::size_t r = 0; r < p.row; ++r) {
            const u64 t = rows[r][p.col];
            const u64 f = t / p.value;
            if (f) ops.axpy(rows[r], q - f, rows[p.row]);
        }
    }

    const std::size_t out_rows = std::max<std::size_t>(rows.size(), 1);
    MatrixZq out(ring, out_rows, cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) out.set_canonical(i, j, rows[i][j]);

    BigInt span = 1;
    for (const HowellPivot& p : pivots) span *= BigInt(q / p.value);
    return HowellForm{std::move(out), std::move(pivots), std::move(span)};
}

BigInt column_span_size(const MatrixZq& m) { return howell_form(m.transpose()).span_size; }

BigInt kernel_size(const MatrixZq& m) {
    BigInt total = 1;
    const BigInt q(m.ring().modulus());
    for (std::size_t j = 0; j < m.cols(); ++j) total *= q;
    return total / column_span_size(m);
}

std::vector<std::vector<u64>> kernel_generators(const MatrixZq& m) {
    const std::size_t n = m.cols(), rows = m.rows();
    // Augmented block [M^T | I]: a row combination with coefficients x reads
    // ((Mx)^T | x^T), so Howell rows with a zero left block carry exactly the
    // kernel elements, and by the Howell property they generate all of them.
    MatrixZq aug(m.ring(), n, rows + n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < rows; ++j) aug.set_canonical(i, j, m.at(j, i));
        aug.set_canonical(i, rows + i, 1 % m.ring().modulus());
    }
    const HowellForm h = howell_form(aug);
    std::vector<std::vector<u64>> gens;
    for (const HowellPivot& p : h.pivots) {
        if (p.col < rows) continue;  // left block not zero
        std::vector<u64> g(n);
        for (std::size_t j = 0; j < n; ++j) g[j] = h.matrix.at(p.row, rows + j);
        gens.push_back(std::move(g));
    }
    return gens;
}

}  // namespace zqdyn
