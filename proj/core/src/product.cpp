#include <zqdyn/product.hpp>

#include <algorithm>
#include <numeric>

namespace zqdyn {

ProductSystem::ProductSystem(RingSpec ring, std::vector<MatrixZq> components)
    : ring_(std::move(ring)), components_(std::move(components)) {
    if (components_.size() != ring_.factor_count())
        throw std::invalid_argument("ProductSystem: component count mismatch");
    for (std::size_t i = 0; i < components_.size(); ++i) {
        const MatrixZq& c = components_[i];
        if (c.ring().modulus() != ring_.moduli()[i])
            throw std::invalid_argument("ProductSystem: component modulus mismatch");
        if (!c.is_square() || c.rows() != components_[0].rows())
            throw std::invalid_argument("ProductSystem: components must be square, same size");
    }
}

std::vector<std::pair<u64, MatrixZq>> decompose_product(const ProductSystem& sys) {
    std::vector<std::pair<u64, MatrixZq>> out;
    out.reserve(sys.components().size());
    for (std::size_t i = 0; i < sys.components().size(); ++i)
        out.emplace_back(sys.ring().moduli()[i], sys.components()[i]);
    return out;
}

bool lfps_test(const ProductSystem& sys, const PeriodSearchConfig& cfg) {
    return std::all_of(sys.components().begin(), sys.components().end(),
                       [&](const MatrixZq& c) { return lfps_test(c, cfg); });
}

u64 eventual_period(const ProductSystem& sys, const PeriodSearchConfig& cfg) {
    u64 t = 1;
    for (const MatrixZq& c : sys.components()) {
        t = std::lcm(t, eventual_period(c, cfg));
        if (t > cfg.max_period) throw PeriodExceedsCap(cfg.max_period);
    }
    return t;
}

CycleStructure cycle_structure(const ProductSystem& sys, const PeriodSearchConfig& cfg) {
    const u64 t = eventual_period(sys, cfg);
    const std::vector<DivisorMu> divs = moebius_divisors(t);

    std::vector<u64> ks;
    std::vector<BigInt> n_k;
    for (const DivisorMu& d : divs) {
        BigInt count = 1;
        for (const MatrixZq& c : sys.components()) {
            const MatrixZq id = MatrixZq::identity(c.ring(), c.rows());
            count *= kernel_size(mat_pow(c, d.divisor) - id);
        }
        ks.push_back(d.divisor);
        n_k.push_back(std::move(count));
    }

    CycleStructure cs;
    cs.eventual_period = t;
    BigInt exact_sum = 0;
    for (std::size_t i = 0; i < ks.size(); ++i) {
        const u64 k = ks[i];
        BigInt p_k = 0;
        for (const DivisorMu& dm : moebius_divisors(k)) {
            const auto it = std::lower_bound(ks.begin(), ks.end(), dm.divisor);
            p_k += BigInt(dm.mu) * n_k[static_cast<std::size_t>(it - ks.begin())];
        }
        if (p_k < 0 || p_k % k != 0)
            throw std::logic_error("cycle_structure: inconsistent exact-period count");
        exact_sum += p_k;
        cs.classes.push_back(PeriodClass{k, n_k[i], p_k, p_k / k});
    }
    cs.total_periodic = n_k.back();
    if (exact_sum != cs.total_periodic || periodic_state_count(sys) != cs.total_periodic)
        throw std::logic_error("cycle_structure: census does not match the periodic-state count");
    return cs;
}

ProductStabilization stabilization_report(const ProductSystem& sys,
                                          const PeriodSearchConfig& cfg) {
    ProductStabilization r;
    r.bound = iteration_bound(sys.dimension(), sys.ring());
    r.is_fixed_point = true;
    u64 max_r = 0;
    bool have_all = true;
    for (const MatrixZq& c : sys.components()) {
        r.stabilized.push_back(mat_pow(c, r.bound));
        if (!lfps_test(c, cfg)) r.is_fixed_point = false;
        const std::optional<u64> rc = minimal_fixed_exponent(c);
        if (rc)
            max_r = std::max(max_r, *rc);
        else
            have_all = false;
    }
    if (have_all) r.minimal_fixed_exponent = max_r;
    return r;
}

BigInt periodic_state_count(const ProductSystem& sys) {
    BigInt total = 1;
    for (const MatrixZq& c : sys.components()) total *= image_chain(c).back();
    return total;
}

}  // namespace zqdyn
