#pragma once

// Systems over a product ring Z_{q1} x ... x Z_{qk}. A linear system over
// the product splits into one independent system per factor; analysis runs
// componentwise and the results combine (periods by lcm, counts by
// multiplication).

#include <utility>
#include <vector>

#include <zqdyn/analysis.hpp>

namespace zqdyn {

class ProductSystem {
  public:
    // One component matrix per factor modulus, all of the same dimension.
    ProductSystem(RingSpec ring, std::vector<MatrixZq> components);

    const RingSpec& ring() const noexcept { return ring_; }
    const std::vector<MatrixZq>& components() const noexcept { return components_; }
    std::size_t dimension() const noexcept { return components_[0].rows(); }

  private:
    RingSpec ring_;
    std::vector<MatrixZq> components_;
};

std::vector<std::pair<u64, MatrixZq>> decompose_product(const ProductSystem& sys);

// Fixed point system iff every component is one.
bool lfps_test(const ProductSystem& sys, const PeriodSearchConfig& cfg = {});

// lcm of the component periods.
u64 eventual_period(const ProductSystem& sys, const PeriodSearchConfig& cfg = {});

// Combined census: N_k is the product of the component counts of
// solutions to A_i^k x = x.
CycleStructure cycle_structure(const ProductSystem& sys, const PeriodSearchConfig& cfg = {});

struct ProductStabilization {
    u64 bound;                        // iteration bound of the product ring
    std::vector<MatrixZq> stabilized; // A_i^B per component
    bool is_fixed_point;
    std::optional<u64> minimal_fixed_exponent;  // max over components
};

ProductStabilization stabilization_report(const ProductSystem& sys,
                                          const PeriodSearchConfig& cfg = {});

// Number of periodic states: product of the final image-chain sizes.
BigInt periodic_state_count(const ProductSystem& sys);

}  // namespace zqdyn
