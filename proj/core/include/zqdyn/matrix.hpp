#pragma once

// Dense row-major matrices over Z_q. Matrices are immutable values in
// practice: every operation returns a fresh matrix, so callers may share
// them freely across threads.

#include <cstddef>
#include <vector>

#include <zqdyn/poly.hpp>
#include <zqdyn/ring.hpp>

namespace zqdyn {

// Multiplication counts of a powering run; one entry per X*X / A*X step
// of the square-and-multiply schedule.
struct PowStats {
    u64 squarings = 0;
    u64 multiplies = 0;
};

class MatrixZq {
  public:
    MatrixZq(const Zq& ring, std::size_t rows, std::size_t cols);

    static MatrixZq identity(const Zq& ring, std::size_t n);
    static MatrixZq from_rows(const Zq& ring, const std::vector<std::vector<long long>>& rows);

    const Zq& ring() const noexcept { return ring_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    u64 at(std::size_t i, std::size_t j) const noexcept { return a_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, long long v) noexcept {
        a_[i * cols_ + j] = ring_.canonical(v);
    }
    void set_canonical(std::size_t i, std::size_t j, u64 v) noexcept { a_[i * cols_ + j] = v; }

    const u64* row_data(std::size_t i) const noexcept { return a_.data() + i * cols_; }

    MatrixZq transpose() const;
    bool is_zero() const noexcept;
    bool is_identity() const noexcept;

    // y = M x for a canonical coordinate vector x.
    std::vector<u64> apply(const std::vector<u64>& x) const;

    bool operator==(const MatrixZq& o) const {
        return ring_ == o.ring_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    friend MatrixZq operator+(const MatrixZq& a, const MatrixZq& b);
    friend MatrixZq operator-(const MatrixZq& a, const MatrixZq& b);

  private:
    Zq ring_;
    std::size_t rows_, cols_;
    std::vector<u64> a_;
};

// Classical cubic product; requires a.cols == b.rows and matching moduli.
MatrixZq mat_mul(const MatrixZq& a, const MatrixZq& b);
inline MatrixZq operator*(const MatrixZq& a, const MatrixZq& b) { return mat_mul(a, b); }

// Left-to-right square-and-multiply: X <- I, then per exponent bit
// X <- X*X and, on a set bit, X <- A*X. A^0 = I.
MatrixZq mat_pow(const MatrixZq& a, const BigInt& e, PowStats* stats = nullptr);
MatrixZq mat_pow(const MatrixZq& a, u64 e, PowStats* stats = nullptr);

// Monic characteristic polynomial det(xI - A), division-free (Berkowitz),
// so it is valid over any Z_q, prime or not.
PolyZq charpoly_berkowitz(const MatrixZq& a);

// det A, read off the characteristic polynomial's constant term.
Residue determinant(const MatrixZq& a);

// p(A) by Horner's rule over matrices.
MatrixZq evaluate(const PolyZq& p, const MatrixZq& a);

}  // namespace zqdyn
