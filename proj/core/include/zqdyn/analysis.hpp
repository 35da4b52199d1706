#pragma once

// Decision theory for the linear system x -> Ax on Z_q^n: the iteration
// bound, the fixed-point-system test, image-chain stabilization, eventual
// period detection and the cycle census via kernel counting and Moebius
// inversion.

#include <optional>
#include <stdexcept>
#include <vector>

#include <zqdyn/howell.hpp>
#include <zqdyn/matrix.hpp>

namespace zqdyn {

struct PeriodSearchConfig {
    // The period search is potentially exponential; exceeding the cap is a
    // first-class error, never a silent wrong answer.
    u64 max_period = u64(1) << 20;
    // Test the running power after each squaring step and return true as
    // soon as it is fixed, instead of always powering to the full bound.
    bool early_exit = false;
};

class PeriodExceedsCap : public std::runtime_error {
  public:
    explicit PeriodExceedsCap(u64 cap_);
    u64 cap;
};

// Least B with 2^B >= q^n, computed with exact integers (q = ring size;
// ceil(n log2 q) without any floating point). With field_case set, q must
// be prime and the bound drops to n.
u64 iteration_bound(std::size_t n, const RingSpec& ring, bool field_case = false);

// Whether every trajectory of x -> Ax ends in a fixed point. Powers A to
// the iteration bound B with square-and-multiply and tests A^B = A^{B+1}.
bool lfps_test(const MatrixZq& a, const PeriodSearchConfig& cfg = {});

// det-based shortcut: an invertible system other than the identity is
// never a fixed point system.
enum class ShortcutVerdict { NotFixedPoint, Inconclusive, FixedPointIdentity };
ShortcutVerdict unit_det_shortcut(const MatrixZq& a);

// Least r with A^r = A^{r+1}, when one exists at or below the iteration
// bound (it exists iff the system is a fixed point system). O(log B)
// matrix products via stored squares and bitwise descent.
std::optional<u64> minimal_fixed_exponent(const MatrixZq& a);

// |im A^0|, |im A^1|, ... truncated at the first repeat. Sizes are
// non-increasing and each divides its predecessor; the final value is the
// number of periodic states.
std::vector<BigInt> image_chain(const MatrixZq& a);

// Least t >= 1 with A^{B+t} = A^B: the lcm of all cycle lengths.
u64 eventual_period(const MatrixZq& a, const PeriodSearchConfig& cfg = {});

// Divisors of t in ascending order, paired with mu(t/divisor).
struct DivisorMu {
    u64 divisor;
    int mu;
};
std::vector<DivisorMu> moebius_divisors(u64 t);

// Census row for one divisor k of the eventual period: N_k counts
// solutions of A^k x = x, P_k the points of exact period k, C_k = P_k / k
// the number of k-cycles.
struct PeriodClass {
    u64 k;
    BigInt points_dividing;  // N_k
    BigInt points_exact;     // P_k
    BigInt cycles;           // C_k
};

struct CycleStructure {
    u64 eventual_period;
    std::vector<PeriodClass> classes;  // one per divisor of t, ascending
    BigInt total_periodic;             // = N_t = final image-chain size
};

CycleStructure cycle_structure(const MatrixZq& a, const PeriodSearchConfig& cfg = {});

struct StabilizationReport {
    u64 bound;                                  // B
    MatrixZq stabilized;                        // A^B
    bool is_fixed_point;
    std::optional<u64> minimal_fixed_exponent;  // least r with A^r = A^{r+1}
    std::vector<BigInt> image_chain_sizes;
};

StabilizationReport stabilization_report(const MatrixZq& a, const PeriodSearchConfig& cfg = {});

}  // namespace zqdyn
