#include "parfpt/oracle.hpp"

#include <stdexcept>

namespace parfpt {

namespace {

// Next subset of the same popcount, ascending (Gosper's hack).
std::uint32_t next_same_size(std::uint32_t x) {
    std::uint32_t c = x & -x;
    std::uint32_t r = x + c;
    return (((r ^ x) >> 2) / c) | r;
}

}  // namespace

OracleResult brute_force_vc(const Graph& g, int k) {
    const int n = g.vertex_count();
    if (n > 24) throw std::invalid_argument("brute_force_vc: n > 24");
    const EdgeSet edges = g.edge_list();

    OracleResult res;
    for (int size = 0; size <= n; ++size) {
        std::uint32_t mask = size == 0 ? 0 : (1u << size) - 1;
        const std::uint32_t limit = n == 32 ? 0xffffffffu : (1u << n);
        do {
            bool covers = true;
            for (const Edge& e : edges) {
                ++res.touches;
                if (!((mask >> e.u) & 1) && !((mask >> e.v) & 1)) {
                    covers = false;
                    break;
                }
            }
            if (covers) {
                res.optimum = size;
                res.member = res.optimum <= k;
                for (int v = 0; v < n; ++v)
                    if ((mask >> v) & 1) res.optimal_witness.push_back(v);
                return res;
            }
            if (size == 0) break;
            mask = next_same_size(mask);
        } while (mask < limit);
    }
    // Unreachable: the full vertex set always covers.
    throw std::logic_error("brute_force_vc: no cover found");
}

bool has_cover_extending(const Graph& g, int k, const VertexSet& partial) {
    if (static_cast<int>(partial.size()) > k) return false;
    auto rest = delete_vertices(g, partial);
    return brute_force_vc(rest.graph, 0).optimum <= k - static_cast<int>(partial.size());
}

}  // namespace parfpt
