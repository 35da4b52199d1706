#pragma once

// Exact arithmetic in Z_q for a runtime modulus q, plus the product ring
// Z_{q1} x ... x Z_{qk}. Elements are stored as canonical representatives
// in [0, q); intermediate products go through 128-bit arithmetic so any
// modulus below 2^63 is safe.

#include <cstdint>
#include <stdexcept>
#include <variant>
#include <vector>

#include <zqdyn/bigint.hpp>

namespace zqdyn {

using u64 = std::uint64_t;
using i64 = std::int64_t;

// Extended Euclid: g = gcd(a, b) with x*a + y*b = g (x, y may be negative).
struct Xgcd {
    u64 g;
    i64 x;
    i64 y;
};
Xgcd xgcd(u64 a, u64 b);

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_probable_prime(u64 n);

// Attempt to invert a mod q: either the inverse, or gcd(a, q) > 1 as witness.
struct Inverse {
    bool is_unit;
    u64 value;  // inverse when is_unit, gcd(a, q) otherwise
};

// Handle for the ring Z_q. Cheap value type, shared by all elements of a
// matrix or polynomial.
class Zq {
  public:
    explicit Zq(u64 modulus) : q_(modulus) {
        if (modulus < 2) throw std::invalid_argument("Zq: modulus must be >= 2");
        if (modulus >> 63) throw std::invalid_argument("Zq: modulus must be < 2^63");
    }

    u64 modulus() const noexcept { return q_; }

    // Canonical representative of an arbitrary signed integer.
    u64 canonical(long long v) const noexcept {
        long long r = v % static_cast<long long>(q_);
        if (r < 0) r += static_cast<long long>(q_);
        return static_cast<u64>(r);
    }

    // The following assume canonical inputs.
    u64 add(u64 a, u64 b) const noexcept {
        u64 s = a + b;
        return s >= q_ ? s - q_ : s;
    }
    u64 sub(u64 a, u64 b) const noexcept { return a >= b ? a - b : a + q_ - b; }
    u64 neg(u64 a) const noexcept { return a == 0 ? 0 : q_ - a; }
    u64 mul(u64 a, u64 b) const noexcept {
        return static_cast<u64>(static_cast<unsigned __int128>(a) * b % q_);
    }
    u64 pow(u64 a, u64 e) const noexcept {
        u64 r = 1 % q_;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    bool is_unit(u64 a) const;
    Inverse try_invert(u64 a) const;

    bool operator==(const Zq&) const = default;

  private:
    u64 q_;
};

// A single ring element carrying its ring handle. Operations on residues
// from different rings throw.
class Residue {
  public:
    Residue(const Zq& ring, long long value) : ring_(ring), v_(ring.canonical(value)) {}

    u64 value() const noexcept { return v_; }
    const Zq& ring() const noexcept { return ring_; }

    friend Residue operator+(const Residue& a, const Residue& b) {
        require_same_ring(a, b);
        return Residue(a.ring_, a.ring_.add(a.v_, b.v_));
    }
    friend Residue operator-(const Residue& a, const Residue& b) {
        require_same_ring(a, b);
        return Residue(a.ring_, a.ring_.sub(a.v_, b.v_));
    }
    friend Residue operator*(const Residue& a, const Residue& b) {
        require_same_ring(a, b);
        return Residue(a.ring_, a.ring_.mul(a.v_, b.v_));
    }
    Residue operator-() const { return Residue(ring_, ring_.neg(v_)); }

    bool operator==(const Residue& o) const { return ring_ == o.ring_ && v_ == o.v_; }

  private:
    static void require_same_ring(const Residue& a, const Residue& b) {
        if (!(a.ring_ == b.ring_)) throw std::invalid_argument("Residue: modulus mismatch");
    }

    Zq ring_;
    u64 v_;
};

struct NotAUnit {
    u64 gcd;  // common divisor of a and q, > 1
};
using InverseResult = std::variant<Residue, NotAUnit>;

InverseResult try_invert(const Residue& a);

// Description of the base ring: Z_q for a single modulus, or the product
// Z_{q1} x ... x Z_{qk} for several. Only used at the system level; element
// arithmetic always happens per factor through Zq.
class RingSpec {
  public:
    explicit RingSpec(std::vector<u64> moduli);

    const std::vector<u64>& moduli() const noexcept { return moduli_; }
    std::size_t factor_count() const noexcept { return moduli_.size(); }
    bool is_single() const noexcept { return moduli_.size() == 1; }
    u64 single_modulus() const;

    // Number of ring elements, exact.
    BigInt size() const;

    bool operator==(const RingSpec&) const = default;

  private:
    std::vector<u64> moduli_;
};

}  // namespace zqdyn
