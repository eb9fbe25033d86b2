#pragma once

#include <cstdint>
#include <istream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace parfpt {

enum class Answer { yes, no };

using Vertex = int;

// Sorted sequence of distinct vertex ids.
using VertexSet = std::vector<Vertex>;

// Unordered pair, normalized so u < v.
struct Edge {
    Vertex u;
    Vertex v;
    friend bool operator==(const Edge&, const Edge&) = default;
};

using EdgeSet = std::vector<Edge>;

// Simple undirected graph in CSR form. Immutable after construction;
// neighbor lists are sorted ascending, so edge iteration order is canonical.
class Graph {
public:
    Graph() = default;

    // Builds from an edge list. Rejects out-of-range ids, self-loops and
    // duplicate edges.
    static Graph from_edges(int n, const std::vector<Edge>& edges);

    int vertex_count() const { return n_; }
    std::int64_t edge_count() const { return m_; }

    std::span<const Vertex> neighbors(Vertex v) const {
        return {nbrs_.data() + offsets_[v], nbrs_.data() + offsets_[v + 1]};
    }
    int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
    int max_degree() const;
    bool has_edge(Vertex u, Vertex v) const;

    // Edges in canonical order: ascending u, then ascending v, with u < v.
    EdgeSet edge_list() const;

    template <class F>
    void for_each_edge(F&& f) const {
        for (Vertex u = 0; u < n_; ++u)
            for (Vertex v : neighbors(u))
                if (u < v) f(u, v);
    }

    // n + m, the size measure used by stage reports.
    std::int64_t size_measure() const { return n_ + m_; }

private:
    int n_ = 0;
    std::int64_t m_ = 0;
    std::vector<int> offsets_ = {0};
    std::vector<Vertex> nbrs_;
};

// A graph together with the remaining solution budget.
struct Instance {
    Graph graph;
    int k = 0;
};

// Result of vertex deletion: the induced subgraph on the kept vertices,
// relabeled to 0..n'-1, plus the map back to the input ids.
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> original_ids;  // original_ids[new_id] = old_id
};

// Induced subgraph on V \ removed. `removed` must be sorted, distinct and valid.
InducedSubgraph delete_vertices(const Graph& g, const VertexSet& removed);

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

// DIMACS ("p edge n m" + "e u v" lines, 1-based) or bare edge list
// ("u v" per line, 0-based, n inferred). Distinguished automatically.
Graph parse_dimacs(std::istream& in);

// Greedy maximal matching over the canonical edge order. Deterministic.
EdgeSet maximal_matching(const Graph& g);

// Greedy maximal packing of pairwise-disjoint sets, scanning `structures`
// in input order, stopping after `cap` members. Deterministic. If fewer
// than cap members are returned, no unused structure is disjoint from all
// chosen ones.
std::vector<VertexSet> maximal_set_packing(const std::vector<VertexSet>& structures, int cap);

// Maximum matching in a bipartite graph given as pairs (left id, right id),
// plus the Koenig minimum vertex cover derived from alternating paths.
struct BipartiteMatching {
    EdgeSet matching;            // pairs (left, right)
    VertexSet left_cover;        // left ids in the minimum cover
    VertexSet right_cover;       // right ids in the minimum cover
    std::int64_t touches = 0;    // edge scans performed, for model charging
};
BipartiteMatching maximum_bipartite_matching(int left_count, int right_count,
                                             const std::vector<std::pair<int, int>>& edges);

enum class InstanceKind { gnp, planted_vc };

// Deterministic instance generator. For gnp, param is the edge probability
// and the returned budget k is 0 (callers set it). For planted_vc, param is
// the planted cover size: every edge is incident to the planted set
// {0..param-1}, so a cover of that size exists, and k is set to param.
// The planted core is drawn independently of n (padding vertices beyond the
// core are isolated), so kernels see identical cores across n.
Instance generate_instance(InstanceKind kind, int n, double param, std::uint64_t seed);

// Set helpers. VertexSets are kept sorted and distinct throughout.
VertexSet set_union(const VertexSet& a, const VertexSet& b);
bool set_contains(const VertexSet& s, Vertex v);
bool sets_disjoint(const VertexSet& a, const VertexSet& b);
VertexSet normalized(VertexSet s);  // sort + dedupe

}  // namespace parfpt
