#pragma once

// Howell normal form over Z_q and the span/kernel counting built on it.
//
// Unlike reduced echelon form over a field, the Howell form is a canonical
// generating set for a row module over Z_q even when q has zero divisors:
// it certifies span membership and yields exact span sizes using nothing
// but gcd arithmetic. q is never factored.

#include <vector>

#include <zqdyn/matrix.hpp>

namespace zqdyn {

struct HowellPivot {
    std::size_t row;
    std::size_t col;
    u64 value;  // divides q
};

struct HowellForm {
    // The canonical form. One zero row stands in for the trivial span.
    MatrixZq matrix;
    std::vector<HowellPivot> pivots;
    // |row span| = product over pivots of q / value.
    BigInt span_size;
};

HowellForm howell_form(const MatrixZq& m);

// |{ Mx : x in Z_q^cols }|, i.e. the row-span size of the transpose.
BigInt column_span_size(const MatrixZq& m);

// |{ x in Z_q^cols : Mx = 0 }| = q^cols / |column span|.
BigInt kernel_size(const MatrixZq& m);

// A generating set for { x : Mx = 0 }, read off the Howell form of the
// augmented block [M^T | I]. Not minimal, but its span is the full kernel.
std::vector<std::vector<u64>> kernel_generators(const MatrixZq& m);

}  // namespace zqdyn
