#pragma once

// Dense polynomials over Z_q, coefficient index i = coefficient of x^i.
// Normalized form has no trailing zero coefficients; the zero polynomial
// keeps an empty coefficient vector and reports no degree.

#include <optional>
#include <vector>

#include <zqdyn/ring.hpp>

namespace zqdyn {

class PolyZq {
  public:
    explicit PolyZq(const Zq& ring) : ring_(ring) {}
    PolyZq(const Zq& ring, const std::vector<long long>& ascending);

    static PolyZq from_canonical(const Zq& ring, std::vector<u64> ascending);

    const Zq& ring() const noexcept { return ring_; }
    const std::vector<u64>& coeffs() const noexcept { return c_; }
    u64 coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
    bool is_zero() const noexcept { return c_.empty(); }
    std::optional<std::size_t> degree() const noexcept {
        if (c_.empty()) return std::nullopt;
        return c_.size() - 1;
    }

    bool operator==(const PolyZq& o) const { return ring_ == o.ring_ && c_ == o.c_; }

    friend PolyZq operator+(const PolyZq& a, const PolyZq& b);
    friend PolyZq operator-(const PolyZq& a, const PolyZq& b);

  private:
    void normalize();

    Zq ring_;
    std::vector<u64> c_;
};

// Convolution of coefficients mod q.
PolyZq poly_mul(const PolyZq& a, const PolyZq& b);
inline PolyZq operator*(const PolyZq& a, const PolyZq& b) { return poly_mul(a, b); }

}  // namespace zqdyn
