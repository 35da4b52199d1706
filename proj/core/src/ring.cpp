#include <zqdyn/ring.hpp>

#include <numeric>

namespace zqdyn {

Xgcd xgcd(u64 a, u64 b) {
    // Iterative extended Euclid on 128-bit intermediates; the Bezout
    // coefficients for 63-bit inputs fit in i64.
    __int128 old_r = a, r = b;
    __int128 old_x = 1, x = 0;
    __int128 old_y = 0, y = 1;
    while (r != 0) {
        __int128 qt = old_r / r;
        __int128 t;
        t = old_r - qt * r;
        old_r = r;
        r = t;
        t = old_x - qt * x;
        old_x = x;
        x = t;
        t = old_y - qt * y;
        old_y = y;
        y = t;
    }
    return Xgcd{static_cast<u64>(old_r), static_cast<i64>(old_x), static_cast<i64>(old_y)};
}

namespace {

u64 mulmod_u64(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 powmod_u64(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_probable_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This base set is a known deterministic witness set for all n < 2^64.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

bool Zq::is_unit(u64 a) const { return std::gcd(a, q_) == 1; }

Inverse Zq::try_invert(u64 a) const {
    const Xgcd e = xgcd(a, q_);
    if (e.g != 1) return Inverse{false, e.g};
    long long x = e.x % static_cast<long long>(q_);
    if (x < 0) x += static_cast<long long>(q_);
    return Inverse{true, static_cast<u64>(x)};
}

InverseResult try_invert(const Residue& a) {
    const Inverse inv = a.ring().try_invert(a.value());
    if (inv.is_unit) return Residue(a.ring(), static_cast<long long>(inv.value));
    return NotAUnit{inv.value};
}

RingSpec::RingSpec(std::vector<u64> moduli) : moduli_(std::move(moduli)) {
    if (moduli_.empty()) throw std::invalid_argument("RingSpec: at least one modulus required");
    for (u64 m : moduli_) {
        if (m < 2) throw std::invalid_argument("RingSpec: every modulus must be >= 2");
        if (m >> 63) throw std::invalid_argument("RingSpec: every modulus must be < 2^63");
    }
}

u64 RingSpec::single_modulus() const {
    if (!is_single()) throw std::logic_error("RingSpec: not a single-modulus ring");
    return moduli_[0];
}

BigInt RingSpec::size() const {
    BigInt s = 1;
    for (u64 m : moduli_) s *= m;
    return s;
}

}  // namespace zqdyn
