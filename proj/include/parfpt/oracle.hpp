#pragma once

#include <cstdint>

#include "parfpt/graph.hpp"

namespace parfpt {

struct OracleResult {
    int optimum = 0;             // minimum vertex cover size
    bool member = false;         // optimum <= queried k
    VertexSet optimal_witness;   // first minimum cover in enumeration order
    std::int64_t touches = 0;    // edge probes performed, for model charging
};

// Exact minimum vertex cover by subset enumeration in size-ascending order,
// so the first covering subset found is an optimum. Guarded at n <= 24.
// Deliberately kept simple: this is the ground truth everything else is
// tested against.
OracleResult brute_force_vc(const Graph& g, int k);

// True iff some vertex cover of size <= k contains all of `partial`.
bool has_cover_extending(const Graph& g, int k, const VertexSet& partial);

}  // namespace parfpt
