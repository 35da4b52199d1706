#include <zqdyn/phase_graph.hpp>

#include <algorithm>
#include <deque>
#include <sstream>

namespace zqdyn {

StateSpaceTooLarge::StateSpaceTooLarge(BigInt size_, u64 cap_)
    : std::runtime_error("state space of size " + size_.str() + " exceeds the cap " +
                         std::to_string(cap_)),
      size(std::move(size_)),
      cap(cap_) {}

u64 encode_state(const std::vector<std::vector<u64>>& coords_per_factor, const RingSpec& ring) {
    const std::size_t k = ring.factor_count();
    if (coords_per_factor.size() != k)
        throw std::invalid_argument("encode_state: factor count mismatch");
    const std::size_t n = coords_per_factor[0].size();
    u64 index = 0;
    u64 radix = 1;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            index += coords_per_factor[j][i] * radix;
            radix *= ring.moduli()[j];
        }
    }
    return index;
}

std::vector<std::vector<u64>> decode_state(u64 index, const RingSpec& ring, std::size_t n) {
    const std::size_t k = ring.factor_count();
    std::vector<std::vector<u64>> coords(k, std::vector<u64>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            coords[j][i] = index % ring.moduli()[j];
            index /= ring.moduli()[j];
        }
    }
    return coords;
}

namespace {

// Hard ceiling on enumerable states regardless of the user cap; keeps the
// u32 successor encoding valid.
constexpr u64 kAbsoluteStateLimit = u64(1) << 31;

PhaseGraph build_graph(const RingSpec& ring, const std::vector<MatrixZq>& components, u64 cap) {
    const std::size_t n = components[0].rows();
    BigInt size = 1;
    for (std::size_t i = 0; i < n; ++i) size *= ring.size();
    if (size > cap || size > kAbsoluteStateLimit) throw StateSpaceTooLarge(size, cap);
    const u64 count = static_cast<u64>(size);

    PhaseGraph g;
    g.state_count = count;
    g.successor.resize(count);
    for (u64 s = 0; s < count; ++s) {
        const auto coords = decode_state(s, ring, n);
        std::vector<std::vector<u64>> next(coords.size());
        for (std::size_t j = 0; j < components.size(); ++j)
            next[j] = components[j].apply(coords[j]);
        g.successor[s] = static_cast<std::uint32_t>(encode_state(next, ring));
    }

    // Peel states with no predecessors; whatever survives is periodic.
    std::vector<u64> indegree(count, 0);
    for (u64 s = 0; s < count; ++s) ++indegree[g.successor[s]];
    std::deque<u64> queue;
    for (u64 s = 0; s < count; ++s)
        if (indegree[s] == 0) queue.push_back(s);
    std::vector<bool> periodic(count, true);
    while (!queue.empty()) {
        const u64 s = queue.front();
        queue.pop_front();
        periodic[s] = false;
        const u64 t = g.successor[s];
        if (--indegree[t] == 0) queue.push_back(t);
    }

    // Tail length: steps until the trajectory enters a cycle, with path
    // memoization along the walked chain.
    std::vector<u64> tail(count, u64(-1));
    std::vector<u64> path;
    for (u64 s = 0; s < count; ++s) {
        if (periodic[s]) {
            tail[s] = 0;
            continue;
        }
        u64 cur = s;
        path.clear();
        while (!periodic[cur] && tail[cur] == u64(-1)) {
            path.push_back(cur);
            cur = g.successor[cur];
        }
        u64 base = periodic[cur] ? 0 : tail[cur];
        for (std::size_t i = path.size(); i-- > 0;) {
            ++base;
            tail[path[i]] = base;
        }
    }
    for (u64 s = 0; s < count; ++s) g.max_tail_length = std::max(g.max_tail_length, tail[s]);

    // Walk the remaining cycles for the census.
    std::vector<bool> seen(count, false);
    for (u64 s = 0; s < count; ++s) {
        if (!periodic[s] || seen[s]) continue;
        u64 len = 0;
        u64 cur = s;
        while (!seen[cur]) {
            seen[cur] = true;
            cur = g.successor[cur];
            ++len;
        }
        ++g.cycle_census[len];
        g.periodic_state_count += len;
    }

    for (u64 s = 0; s < count; ++s)
        if (g.successor[s] == s) g.fixed_points.push_back(s);
    return g;
}

std::string census_to_string(const std::map<u64, u64>& census) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [len, cnt] : census) {
        if (!first) os << ", ";
        first = false;
        os << len << ": " << cnt;
    }
    os << "}";
    return os.str();
}

CrosscheckReport crosscheck_impl(const PhaseGraph& g, const CycleStructure& cs, bool lfps,
                                 const BigInt& periodic_count) {
    CrosscheckReport r;
    r.state_count = g.state_count;

    std::map<u64, u64> analytic;
    for (const PeriodClass& c : cs.classes)
        if (c.cycles > 0) analytic[c.k] = static_cast<u64>(c.cycles);
    if (analytic != g.cycle_census) {
        r.pass = false;
        r.mismatches.push_back("cycle census: oracle " + census_to_string(g.cycle_census) +
                               " vs analytic " + census_to_string(analytic));
    }

    const BigInt oracle_fixed = g.fixed_points.size();
    const BigInt analytic_fixed = cs.classes.front().points_dividing;  // N_1
    if (oracle_fixed != analytic_fixed) {
        r.pass = false;
        r.mismatches.push_back("fixed points: oracle " + oracle_fixed.str() + " vs analytic " +
                               analytic_fixed.str());
    }

    if (BigInt(g.periodic_state_count) != periodic_count) {
        r.pass = false;
        r.mismatches.push_back("periodic states: oracle " +
                               std::to_string(g.periodic_state_count) + " vs analytic " +
                               periodic_count.str());
    }

    const bool oracle_lfps =
        g.cycle_census.empty() ||
        (g.cycle_census.size() == 1 && g.cycle_census.begin()->first == 1);
    if (oracle_lfps != lfps) {
        r.pass = false;
        r.mismatches.push_back(std::string("fixed point verdict: oracle ") +
                               (oracle_lfps ? "true" : "false") + " vs analytic " +
                               (lfps ? "true" : "false"));
    }
    return r;
}

}  // namespace

PhaseGraph enumerate_phase_graph(const MatrixZq& a, u64 cap) {
    if (!a.is_square()) throw std::invalid_argument("enumerate_phase_graph: matrix must be square");
    return build_graph(RingSpec({a.ring().modulus()}), {a}, cap);
}

PhaseGraph enumerate_phase_graph(const ProductSystem& sys, u64 cap) {
    return build_graph(sys.ring(), sys.components(), cap);
}

CrosscheckReport oracle_crosscheck(const MatrixZq& a, u64 cap, const PeriodSearchConfig& cfg) {
    const PhaseGraph g = enumerate_phase_graph(a, cap);
    return crosscheck_impl(g, cycle_structure(a, cfg), lfps_test(a, cfg), image_chain(a).back());
}

CrosscheckReport oracle_crosscheck(const ProductSystem& sys, u64 cap,
                                   const PeriodSearchConfig& cfg) {
    const PhaseGraph g = enumerate_phase_graph(sys, cap);
    return crosscheck_impl(g, cycle_structure(sys, cfg), lfps_test(sys, cfg),
                           periodic_state_count(sys));
}

}  // namespace zqdyn
