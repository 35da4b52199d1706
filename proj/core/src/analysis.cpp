#include <zqdyn/analysis.hpp>

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace zqdyn {

PeriodExceedsCap::PeriodExceedsCap(u64 cap_)
    : std::runtime_error("eventual period exceeds the search cap " + std::to_string(cap_)),
      cap(cap_) {}

u64 iteration_bound(std::size_t n, const RingSpec& ring, bool field_case) {
    if (n == 0) throw std::invalid_argument("iteration_bound: n must be >= 1");
    if (field_case) {
        if (!ring.is_single() || !is_probable_prime(ring.single_modulus()))
            throw std::invalid_argument("iteration_bound: field case requires a prime modulus");
        return static_cast<u64>(n);
    }
    BigInt total = 1;
    const BigInt q = ring.size();
    for (std::size_t i = 0; i < n; ++i) total *= q;
    if (total <= 1) return 0;
    return boost::multiprecision::msb(total - 1) + 1;  // least B with 2^B >= q^n
}

namespace {

RingSpec ring_of(const MatrixZq& a) { return RingSpec({a.ring().modulus()}); }

void require_square(const MatrixZq& a, const char* who) {
    if (!a.is_square()) throw std::invalid_argument(std::string(who) + ": matrix must be square");
}

}  // namespace

bool lfps_test(const MatrixZq& a, const PeriodSearchConfig& cfg) {
    require_square(a, "lfps_test");
    const u64 b = iteration_bound(a.rows(), ring_of(a));
    MatrixZq x = MatrixZq::identity(a.ring(), a.rows());
    for (std::size_t i = 64 - static_cast<std::size_t>(std::countl_zero(b)); i-- > 0;) {
        x = mat_mul(x, x);
        if ((b >> i) & 1) x = mat_mul(a, x);
        if (cfg.early_exit && mat_mul(x, a) == x) return true;
    }
    return mat_mul(x, a) == x;
}

ShortcutVerdict unit_det_shortcut(const MatrixZq& a) {
    require_square(a, "unit_det_shortcut");
    if (a.is_identity()) return ShortcutVerdict::FixedPointIdentity;
    if (a.ring().is_unit(determinant(a).value())) return ShortcutVerdict::NotFixedPoint;
    return ShortcutVerdict::Inconclusive;
}

std::optional<u64> minimal_fixed_exponent(const MatrixZq& a) {
    require_square(a, "minimal_fixed_exponent");
    if (a.is_identity()) return 0;
    const u64 b = iteration_bound(a.rows(), ring_of(a));

    // Stored squares a^(2^i) make each probe a single product away.
    const std::size_t bits = 64 - static_cast<std::size_t>(std::countl_zero(b));
    std::vector<MatrixZq> sq;
    sq.reserve(bits);
    sq.push_back(a);
    for (std::size_t i = 1; i < bits; ++i) sq.push_back(mat_mul(sq.back(), sq.back()));

    const auto fixed_at = [&](const MatrixZq& p) { return mat_mul(p, a) == p; };

    MatrixZq pow_b = MatrixZq::identity(a.ring(), a.rows());
    for (std::size_t i = bits; i-- > 0;)
        if ((b >> i) & 1) pow_b = mat_mul(pow_b, sq[i]);
    if (!fixed_at(pow_b)) return std::nullopt;

    // A^r = A^{r+1} is monotone in r, so the answer is 1 + the largest
    // exponent that is still unfixed, found by bitwise descent.
    u64 e = 0;
    MatrixZq pow_e = MatrixZq::identity(a.ring(), a.rows());
    for (std::size_t i = bits; i-- > 0;) {
        const u64 cand = e | (u64(1) << i);
        if (cand > b) continue;
        MatrixZq p = mat_mul(pow_e, sq[i]);
        if (!fixed_at(p)) {
            e = cand;
            pow_e = std::move(p);
        }
    }
    return e + 1;
}

std::vector<BigInt> image_chain(const MatrixZq& a) {
    require_square(a, "image_chain");
    const u64 b = iteration_bound(a.rows(), ring_of(a));
    std::vector<BigInt> sizes;
    MatrixZq p = MatrixZq::identity(a.ring(), a.rows());
    BigInt prev = -1;
    for (u64 k = 0; k <= b + 1; ++k) {
        BigInt s = column_span_size(p);
        if (s == prev) return sizes;
        sizes.push_back(s);
        prev = std::move(s);
        p = mat_mul(a, p);
    }
    throw std::logic_error("image_chain: no stabilization within the iteration bound");
}

u64 eventual_period(const MatrixZq& a, const PeriodSearchConfig& cfg) {
    require_square(a, "eventual_period");
    if (cfg.max_period == 0) throw std::invalid_argument("eventual_period: cap must be >= 1");
    const u64 b = iteration_bound(a.rows(), ring_of(a));
    const MatrixZq stab = mat_pow(a, b);

    // The sequence stab, stab*A, stab*A^2, ... is purely periodic (A acts
    // bijectively on the stabilized image), so scanning for the first
    // recurrence is cycle detection and yields some period T <= cap.
    u64 t = 0;
    MatrixZq x = stab;
    for (u64 k = 1; k <= cfg.max_period; ++k) {
        x = mat_mul(x, a);
        if (x == stab) {
            t = k;
            break;
        }
    }
    if (t == 0) throw PeriodExceedsCap(cfg.max_period);

    // Minimize over the divisors of T by direct testing.
    for (const DivisorMu& d : moebius_divisors(t)) {
        if (d.divisor == t) break;
        if (mat_mul(stab, mat_pow(a, d.divisor)) == stab) return d.divisor;
    }
    return t;
}

std::vector<DivisorMu> moebius_divisors(u64 t) {
    if (t == 0) throw std::invalid_argument("moebius_divisors: t must be >= 1");
    // Trial-division factorization; t is a found period, small by
    // construction (this never touches the modulus q).
    std::vector<std::pair<u64, unsigned>> factors;
    u64 rest = t;
    for (u64 p = 2; p * p <= rest; ++p) {
        if (rest % p) continue;
        unsigned e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        factors.emplace_back(p, e);
    }
    if (rest > 1) factors.emplace_back(rest, 1);

    std::vector<u64> divisors{1};
    for (const auto& [p, e] : factors) {
        const std::size_t sz = divisors.size();
        u64 pe = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pe *= p;
            for (std::size_t j = 0; j < sz; ++j) divisors.push_back(divisors[j] * pe);
        }
    }
    std::sort(divisors.begin(), divisors.end());

    const auto mu = [&](u64 m) -> int {
        int v = 1;
        for (const auto& [p, e] : factors) {
            (void)e;
            if (m % p == 0) {
                m /= p;
                if (m % p == 0) return 0;
                v = -v;
            }
        }
        return v;
    };

    std::vector<DivisorMu> out;
    out.reserve(divisors.size());
    for (u64 d : divisors) out.push_back(DivisorMu{d, mu(t / d)});
    return out;
}

CycleStructure cycle_structure(const MatrixZq& a, const PeriodSearchConfig& cfg) {
    require_square(a, "cycle_structure");
    const u64 t = eventual_period(a, cfg);
    const std::vector<DivisorMu> divs = moebius_divisors(t);
    const MatrixZq id = MatrixZq::identity(a.ring(), a.rows());

    std::vector<u64> ks;
    std::vector<BigInt> n_k;
    for (const DivisorMu& d : divs) {
        ks.push_back(d.divisor);
        n_k.push_back(kernel_size(mat_pow(a, d.divisor) - id));
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
    if (n_k.front() < 1) throw std::logic_error("cycle_structure: zero vector must be fixed");

    cs.total_periodic = n_k.back();  // N_t
    const std::vector<BigInt> chain = image_chain(a);
    if (exact_sum != cs.total_periodic || chain.back() != cs.total_periodic)
        throw std::logic_error("cycle_structure: census does not match the periodic-state count");
    return cs;
}

StabilizationReport stabilization_report(const MatrixZq& a, const PeriodSearchConfig& cfg) {
    require_square(a, "stabilization_report");
    const u64 b = iteration_bound(a.rows(), ring_of(a));
    StabilizationReport r{b, mat_pow(a, b), false, std::nullopt, image_chain(a)};
    r.is_fixed_point = lfps_test(a, cfg);
    r.minimal_fixed_exponent = minimal_fixed_exponent(a);
    return r;
}

}  // namespace zqdyn
