#include <zqdyn/poly.hpp>

namespace zqdyn {

PolyZq::PolyZq(const Zq& ring, const std::vector<long long>& ascending) : ring_(ring) {
    c_.reserve(ascending.size());
    for (long long v : ascending) c_.push_back(ring.canonical(v));
    normalize();
}

PolyZq PolyZq::from_canonical(const Zq& ring, std::vector<u64> ascending) {
    PolyZq p(ring);
    p.c_ = std::move(ascending);
    p.normalize();
    return p;
}

void PolyZq::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

static void require_same_ring(const PolyZq& a, const PolyZq& b) {
    if (!(a.ring() == b.ring())) throw std::invalid_argument("PolyZq: modulus mismatch");
}

PolyZq operator+(const PolyZq& a, const PolyZq& b) {
    require_same_ring(a, b);
    const Zq& r = a.ring();
    std::vector<u64> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = r.add(a.coeff(i), b.coeff(i));
    return PolyZq::from_canonical(r, std::move(c));
}

PolyZq operator-(const PolyZq& a, const PolyZq& b) {
    require_same_ring(a, b);
    const Zq& r = a.ring();
    std::vector<u64> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = r.sub(a.coeff(i), b.coeff(i));
    return PolyZq::from_canonical(r, std::move(c));
}

PolyZq poly_mul(const PolyZq& a, const PolyZq& b) {
    require_same_ring(a, b);
    const Zq& r = a.ring();
    if (a.is_zero() || b.is_zero()) return PolyZq(r);
    std::vector<u64> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        const u64 ai = a.coeffs()[i];
        if (!ai) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
            c[i + j] = r.add(c[i + j], r.mul(ai, b.coeffs()[j]));
        }
    }
    return PolyZq::from_canonical(r, std::move(c));
}

}  // namespace zqdyn
