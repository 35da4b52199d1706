#include <zqdyn/matrix.hpp>

#include <boost/multiprecision/cpp_int.hpp>

namespace zqdyn {

using u128 = unsigned __int128;

MatrixZq::MatrixZq(const Zq& ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), a_(rows * cols, 0) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("MatrixZq: dimensions must be >= 1");
}

MatrixZq MatrixZq::identity(const Zq& ring, std::size_t n) {
    MatrixZq m(ring, n, n);
    const u64 one = 1 % ring.modulus();
    for (std::size_t i = 0; i < n; ++i) m.set_canonical(i, i, one);
    return m;
}

MatrixZq MatrixZq::from_rows(const Zq& ring, const std::vector<std::vector<long long>>& rows) {
    if (rows.empty()) throw std::invalid_argument("MatrixZq: dimensions must be >= 1");
    MatrixZq m(ring, rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw std::invalid_argument("MatrixZq: ragged rows");
        for (std::size_t j = 0; j < m.cols_; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

MatrixZq MatrixZq::transpose() const {
    MatrixZq t(ring_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.set_canonical(j, i, at(i, j));
    return t;
}

bool MatrixZq::is_zero() const noexcept {
    for (u64 v : a_)
        if (v) return false;
    return true;
}

bool MatrixZq::is_identity() const noexcept {
    if (rows_ != cols_) return false;
    const u64 one = 1 % ring_.modulus();
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? one : 0)) return false;
    return true;
}

std::vector<u64> MatrixZq::apply(const std::vector<u64>& x) const {
    if (x.size() != cols_) throw std::invalid_argument("MatrixZq::apply: dimension mismatch");
    const u64 q = ring_.modulus();
    std::vector<u64> y(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        u128 acc = 0;
        const u64* row = row_data(i);
        for (std::size_t j = 0; j < cols_; ++j) acc += u128(row[j]) * x[j] % q;
        y[i] = static_cast<u64>(acc % q);
    }
    return y;
}

static void require_same_shape(const MatrixZq& a, const MatrixZq& b) {
    if (!(a.ring() == b.ring())) throw std::invalid_argument("MatrixZq: modulus mismatch");
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("MatrixZq: dimension mismatch");
}

MatrixZq operator+(const MatrixZq& a, const MatrixZq& b) {
    require_same_shape(a, b);
    MatrixZq c(a.ring_, a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = a.ring_.add(a.a_[i], b.a_[i]);
    return c;
}

MatrixZq operator-(const MatrixZq& a, const MatrixZq& b) {
    require_same_shape(a, b);
    MatrixZq c(a.ring_, a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = a.ring_.sub(a.a_[i], b.a_[i]);
    return c;
}

MatrixZq mat_mul(const MatrixZq& a, const MatrixZq& b) {
    if (!(a.ring() == b.ring())) throw std::invalid_argument("mat_mul: modulus mismatch");
    if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: dimension mismatch");
    const u64 q = a.ring().modulus();
    const std::size_t n = a.rows(), k = a.cols(), m = b.cols();
    MatrixZq c(a.ring(), n, m);

    // i-k-j order streams over B's rows; per-row 128-bit accumulators defer
    // the reduction to one modulo per output entry. For q <= 2^32 each term
    // fits a single 64x64 product, so the inner loop is just mul + add.
    std::vector<u128> acc(m);
    const bool small_q = q <= (u64(1) << 32);
    for (std::size_t i = 0; i < n; ++i) {
        std::fill(acc.begin(), acc.end(), u128(0));
        for (std::size_t t = 0; t < k; ++t) {
            const u64 ait = a.at(i, t);
            if (!ait) continue;
            const u64* brow = b.row_data(t);
            if (small_q) {
                for (std::size_t j = 0; j < m; ++j) acc[j] += u128(ait) * brow[j];
            } else {
                for (std::size_t j = 0; j < m; ++j) acc[j] += u128(ait) * brow[j] % q;
            }
        }
        for (std::size_t j = 0; j < m; ++j) c.set_canonical(i, j, static_cast<u64>(acc[j] % q));
    }
    return c;
}

static MatrixZq mat_pow_bits(const MatrixZq& a, const BigInt& e, PowStats* stats) {
    if (!a.is_square()) throw std::invalid_argument("mat_pow: matrix must be square");
    if (e < 0) throw std::invalid_argument("mat_pow: exponent must be >= 0");
    MatrixZq x = MatrixZq::identity(a.ring(), a.rows());
    if (e == 0) return x;
    for (std::size_t i = boost::multiprecision::msb(e) + 1; i-- > 0;) {
        x = mat_mul(x, x);
        if (stats) ++stats->squarings;
        if (boost::multiprecision::bit_test(e, static_cast<unsigned>(i))) {
            x = mat_mul(a, x);
            if (stats) ++stats->multiplies;
        }
    }
    return x;
}

MatrixZq mat_pow(const MatrixZq& a, const BigInt& e, PowStats* stats) {
    return mat_pow_bits(a, e, stats);
}

MatrixZq mat_pow(const MatrixZq& a, u64 e, PowStats* stats) {
    return mat_pow_bits(a, BigInt(e), stats);
}

PolyZq charpoly_berkowitz(const MatrixZq& a) {
    if (!a.is_square()) throw std::invalid_argument("charpoly: matrix must be square");
    const Zq& ring = a.ring();
    const u64 q = ring.modulus();
    const std::size_t n = a.rows();

    // Samuelson-Berkowitz: fold trailing principal submatrices into the
    // coefficient vector through lower-triangular Toeplitz products.
    // Coefficients are kept in descending order (leading term first).
    std::vector<u64> p{1 % q};
    std::vector<u64> col, np, v, w;
    for (std::size_t i = n; i-- > 0;) {
        const std::size_t m = n - 1 - i;  // size of the submatrix below/right of (i, i)
        col.assign(m + 2, 0);
        col[0] = 1 % q;
        col[1] = ring.neg(a.at(i, i));
        if (m > 0) {
            v.assign(m, 0);
            for (std::size_t r = 0; r < m; ++r) v[r] = a.at(i + 1 + r, i);
            for (std::size_t t = 0; t < m; ++t) {
                // col[t+2] = -(row_i . Asub^t . col_i)
                u128 dot = 0;
                for (std::size_t s = 0; s < m; ++s) dot += u128(a.at(i, i + 1 + s)) * v[s] % q;
                col[t + 2] = ring.neg(static_cast<u64>(dot % q));
                if (t + 1 < m) {
                    w.assign(m, 0);
                    for (std::size_t r = 0; r < m; ++r) {
                        u128 acc = 0;
                        for (std::size_t s = 0; s < m; ++s)
                            acc += u128(a.at(i + 1 + r, i + 1 + s)) * v[s] % q;
                        w[r] = static_cast<u64>(acc % q);
                    }
                    v.swap(w);
                }
            }
        }
        // Truncated convolution: one more coefficient per fold.
        np.assign(p.size() + 1, 0);
        for (std::size_t j = 0; j < np.size(); ++j) {
            u128 acc = 0;
            for (std::size_t t = 0; t < p.size() && t <= j; ++t) {
                if (j - t < col.size()) acc += u128(col[j - t]) * p[t] % q;
            }
            np[j] = static_cast<u64>(acc % q);
        }
        p.swap(np);
    }

    std::vector<u64> ascending(p.rbegin(), p.rend());
    return PolyZq::from_canonical(ring, std::move(ascending));
}

Residue determinant(const MatrixZq& a) {
    const PolyZq ch = charpoly_berkowitz(a);
    const u64 c0 = ch.coeff(0);  // ch(0) = det(-A) = (-1)^n det A
    const u64 d = (a.rows() % 2 == 0) ? c0 : a.ring().neg(c0);
    return Residue(a.ring(), static_cast<long long>(d));
}

MatrixZq evaluate(const PolyZq& p, const MatrixZq& a) {
    if (!a.is_square()) throw std::invalid_argument("evaluate: matrix must be square");
    if (!(p.ring() == a.ring())) throw std::invalid_argument("evaluate: modulus mismatch");
    const std::size_t n = a.rows();
    MatrixZq acc(a.ring(), n, n);
    const std::vector<u64>& c = p.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        acc = mat_mul(acc, a);
        for (std::size_t d = 0; d < n; ++d)
            acc.set_canonical(d, d, a.ring().add(acc.at(d, d), c[i]));
    }
    return acc;
}

}  // namespace zqdyn
