#pragma once

// Brute-force enumeration of the full functional graph of x -> Ax on a
// small state space: the independent ground truth the analytic results are
// checked against.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <zqdyn/product.hpp>

namespace zqdyn {

class StateSpaceTooLarge : public std::runtime_error {
  public:
    StateSpaceTooLarge(BigInt size_, u64 cap_);
    BigInt size;
    u64 cap;
};

// State indices are mixed-radix, little-endian over coordinates:
// coordinate 0 is the least significant digit; within a coordinate the
// ring factors run least significant first.
u64 encode_state(const std::vector<std::vector<u64>>& coords_per_factor, const RingSpec& ring);
std::vector<std::vector<u64>> decode_state(u64 index, const RingSpec& ring, std::size_t n);

struct PhaseGraph {
    u64 state_count = 0;
    std::vector<std::uint32_t> successor;  // total map, one edge per state
    std::map<u64, u64> cycle_census;       // cycle length -> number of cycles
    u64 max_tail_length = 0;               // 0 iff the map is a permutation
    std::vector<u64> fixed_points;         // ascending state indices
    u64 periodic_state_count = 0;
};

PhaseGraph enumerate_phase_graph(const MatrixZq& a, u64 cap = 1'000'000);
PhaseGraph enumerate_phase_graph(const ProductSystem& sys, u64 cap = 1'000'000);

// Oracle vs analysis: census against cycle_structure, fixed points against
// N_1, periodic states against the image chain, all-cycles-length-1
// against lfps_test. Any mismatch is named in the report.
struct CrosscheckReport {
    bool pass = true;
    u64 state_count = 0;
    std::vector<std::string> mismatches;
};

CrosscheckReport oracle_crosscheck(const MatrixZq& a, u64 cap = 1'000'000,
                                   const PeriodSearchConfig& cfg = {});
CrosscheckReport oracle_crosscheck(const ProductSystem& sys, u64 cap = 1'000'000,
                                   const PeriodSearchConfig& cfg = {});

}  // namespace zqdyn
