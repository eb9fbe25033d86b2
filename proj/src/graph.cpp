#include "parfpt/graph.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <random>
#include <sstream>
#include <unordered_set>

namespace parfpt {

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    std::vector<int> deg(n, 0);
    for (const Edge& e : edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw std::invalid_argument("vertex id out of range");
        if (e.u == e.v) throw std::invalid_argument("self-loop");
        ++deg[e.u];
        ++deg[e.v];
    }
    Graph g;
    g.n_ = n;
    g.m_ = static_cast<std::int64_t>(edges.size());
    g.offsets_.assign(n + 1, 0);
    for (int v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
    g.nbrs_.resize(g.offsets_[n]);
    std::vector<int> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const Edge& e : edges) {
        g.nbrs_[cursor[e.u]++] = e.v;
        g.nbrs_[cursor[e.v]++] = e.u;
    }
    for (int v = 0; v < n; ++v) {
        auto* b = g.nbrs_.data() + g.offsets_[v];
        auto* e = g.nbrs_.data() + g.offsets_[v + 1];
        std::sort(b, e);
        if (std::adjacent_find(b, e) != e) throw std::invalid_argument("duplicate edge");
    }
    return g;
}

int Graph::max_degree() const {
    int d = 0;
    for (Vertex v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (degree(u) > degree(v)) std::swap(u, v);
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

EdgeSet Graph::edge_list() const {
    EdgeSet out;
    out.reserve(static_cast<std::size_t>(m_));
    for_each_edge([&](Vertex u, Vertex v) { out.push_back({u, v}); });
    return out;
}

InducedSubgraph delete_vertices(const Graph& g, const VertexSet& removed) {
    const int n = g.vertex_count();
    std::vector<char> gone(n, 0);
    for (Vertex v : removed) {
        if (v < 0 || v >= n) throw std::invalid_argument("delete_vertices: invalid vertex id");
        gone[v] = 1;
    }
    InducedSubgraph out;
    std::vector<int> new_id(n, -1);
    for (Vertex v = 0; v < n; ++v) {
        if (!gone[v]) {
            new_id[v] = static_cast<int>(out.original_ids.size());
            out.original_ids.push_back(v);
        }
    }
    std::vector<Edge> edges;
    g.for_each_edge([&](Vertex u, Vertex v) {
        if (!gone[u] && !gone[v]) edges.push_back({new_id[u], new_id[v]});
    });
    out.graph = Graph::from_edges(static_cast<int>(out.original_ids.size()), edges);
    return out;
}

namespace {

// Strips comments and blanks; returns (line number, content) pairs.
std::vector<std::pair<int, std::string>> significant_lines(std::istream& in) {
    std::vector<std::pair<int, std::string>> out;
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == 'c') continue;
        out.emplace_back(no, line.substr(first));
    }
    return out;
}

Graph parse_dimacs_body(const std::vector<std::pair<int, std::string>>& lines) {
    std::istringstream header(lines[0].second);
    std::string p, fmt;
    long long n = -1, m = -1;
    header >> p >> fmt >> n >> m;
    if (header.fail() || p != "p" || fmt != "edge" || n < 0 || m < 0)
        throw ParseError(lines[0].first, "malformed header, expected 'p edge <n> <m>'");
    std::vector<Edge> edges;
    std::unordered_set<long long> seen;
    edges.reserve(static_cast<std::size_t>(m));
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::istringstream ls(lines[i].second);
        std::string tag;
        long long u = 0, v = 0;
        ls >> tag >> u >> v;
        if (ls.fail() || tag != "e")
            throw ParseError(lines[i].first, "malformed edge line, expected 'e <u> <v>'");
        if (u < 1 || u > n || v < 1 || v > n)
            throw ParseError(lines[i].first, "vertex id out of range 1.." + std::to_string(n));
        if (u == v) throw ParseError(lines[i].first, "self-loop");
        Edge e{static_cast<Vertex>(std::min(u, v) - 1), static_cast<Vertex>(std::max(u, v) - 1)};
        if (!seen.insert(static_cast<long long>(e.u) * n + e.v).second)
            throw ParseError(lines[i].first, "duplicate edge");
        edges.push_back(e);
    }
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError(lines.empty() ? 1 : lines.back().first,
                         "edge count mismatch: header says " + std::to_string(m) + ", found " +
                             std::to_string(edges.size()));
    return Graph::from_edges(static_cast<int>(n), edges);
}

Graph parse_edge_list_body(const std::vector<std::pair<int, std::string>>& lines) {
    std::vector<Edge> edges;
    std::unordered_set<long long> seen;
    long long n = 0;
    for (const auto& [no, text] : lines) {
        std::istringstream ls(text);
        long long u = 0, v = 0;
        ls >> u >> v;
        if (ls.fail() || u < 0 || v < 0) throw ParseError(no, "malformed edge line, expected '<u> <v>'");
        if (u == v) throw ParseError(no, "self-loop");
        Edge e{static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))};
        if (!seen.insert((static_cast<long long>(e.u) << 32) | static_cast<long long>(e.v)).second)
            throw ParseError(no, "duplicate edge");
        edges.push_back(e);
        n = std::max({n, u + 1, v + 1});
    }
    return Graph::from_edges(static_cast<int>(n), edges);
}

}  // namespace

Graph parse_dimacs(std::istream& in) {
    auto lines = significant_lines(in);
    if (lines.empty()) return Graph::from_edges(0, {});
    if (lines[0].second[0] == 'p') return parse_dimacs_body(lines);
    return parse_edge_list_body(lines);
}

EdgeSet maximal_matching(const Graph& g) {
    EdgeSet matching;
    std::vector<char> matched(g.vertex_count(), 0);
    g.for_each_edge([&](Vertex u, Vertex v) {
        if (!matched[u] && !matched[v]) {
            matched[u] = matched[v] = 1;
            matching.push_back({u, v});
        }
    });
    return matching;
}

std::vector<VertexSet> maximal_set_packing(const std::vector<VertexSet>& structures, int cap) {
    if (structures.empty()) throw std::invalid_argument("maximal_set_packing: empty input");
    if (cap < 1) throw std::invalid_argument("maximal_set_packing: cap must be >= 1");
    Vertex max_id = 0;
    for (const auto& s : structures)
        for (Vertex v : s) max_id = std::max(max_id, v);
    std::vector<char> used(max_id + 1, 0);
    std::vector<VertexSet> packing;
    for (const auto& s : structures) {
        if (static_cast<int>(packing.size()) >= cap) break;
        bool free = true;
        for (Vertex v : s)
            if (used[v]) {
                free = false;
                break;
            }
        if (!free) continue;
        for (Vertex v : s) used[v] = 1;
        packing.push_back(s);
    }
    return packing;
}

BipartiteMatching maximum_bipartite_matching(int left_count, int right_count,
                                             const std::vector<std::pair<int, int>>& edges) {
    // Hopcroft-Karp with canonical adjacency order, then the Koenig cover
    // from alternating-path reachability out of the unmatched left vertices.
    std::vector<std::vector<int>> adj(left_count);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= left_count || v < 0 || v >= right_count)
            throw std::invalid_argument("bipartite matching: id out of range");
        adj[u].push_back(v);
    }
    for (auto& a : adj) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    const int INF = std::numeric_limits<int>::max();
    std::vector<int> match_l(left_count, -1), match_r(right_count, -1), dist(left_count);
    std::vector<int> queue;
    queue.reserve(left_count);
    std::int64_t touches = 0;

    auto bfs = [&]() {
        queue.clear();
        bool reachable_free = false;
        for (int u = 0; u < left_count; ++u) {
            if (match_l[u] < 0) {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = INF;
            }
        }
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            for (int v : adj[u]) {
                ++touches;
                int w = match_r[v];
                if (w < 0) {
                    reachable_free = true;
                } else if (dist[w] == INF) {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        return reachable_free;
    };
    std::function<bool(int)> dfs = [&](int u) {
        for (int v : adj[u]) {
            ++touches;
            int w = match_r[v];
            if (w < 0 || (dist[w] == dist[u] + 1 && dfs(w))) {
                match_l[u] = v;
                match_r[v] = u;
                return true;
            }
        }
        dist[u] = INF;
        return false;
    };
    while (bfs())
        for (int u = 0; u < left_count; ++u)
            if (match_l[u] < 0) dfs(u);

    // Alternating reachability: unmatched edges left->right, matched right->left.
    std::vector<char> vis_l(left_count, 0), vis_r(right_count, 0);
    std::vector<int> stack;
    for (int u = 0; u < left_count; ++u)
        if (match_l[u] < 0) {
            vis_l[u] = 1;
            stack.push_back(u);
        }
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : adj[u]) {
            ++touches;
            if (v == match_l[u] || vis_r[v]) continue;
            vis_r[v] = 1;
            int w = match_r[v];
            if (w >= 0 && !vis_l[w]) {
                vis_l[w] = 1;
                stack.push_back(w);
            }
        }
    }
    BipartiteMatching out;
    out.touches = touches + left_count + right_count;
    for (int u = 0; u < left_count; ++u) {
        if (match_l[u] >= 0) out.matching.push_back({u, match_l[u]});
        if (!vis_l[u]) out.left_cover.push_back(u);
    }
    for (int v = 0; v < right_count; ++v)
        if (vis_r[v]) out.right_cover.push_back(v);
    return out;
}

namespace {

// Portable deterministic draws: same stream on every platform for a fixed seed.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
    return bound == 0 ? 0 : rng() % bound;
}

Instance generate_gnp(int n, double p, std::uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("gnp: p must be in [0,1]");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0,1)
            if (x < p) edges.push_back({u, v});
        }
    return {Graph::from_edges(n, edges), 0};
}

Instance generate_planted(int n, int k, std::uint64_t seed) {
    if (k < 0 || k > n) throw std::invalid_argument("planted_vc: need 0 <= k <= n");
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    // Core on min(n, 4k) vertices; the rest stay isolated. The core draw
    // never consults n beyond the cap, so cores match across n >= 4k.
    const int core = std::min<long long>(n, 4LL * k);
    std::vector<Edge> edges;
    auto add = [&](Vertex a, Vertex b) {
        if (a == b) return;
        Edge e{std::min(a, b), std::max(a, b)};
        for (const Edge& prev : edges)
            if (prev == e) return;
        edges.push_back(e);
    };
    // Five-cycle blocks: three planted vertices cover each block, so the
    // planted budget is tight (optimum equals the planted size when no
    // extras collapse blocks) and every maximal matching exceeds half the
    // budget. Odd cycles also survive the half-integral relaxation, so
    // kernels reduce these cores without resolving them.
    int planted_used = 0, helper = k;
    while (planted_used + 3 <= k && helper + 2 <= core) {
        Vertex a = planted_used, b = planted_used + 1, c = planted_used + 2;
        Vertex h1 = helper, h2 = helper + 1;
        add(a, h1);
        add(h1, b);
        add(b, c);
        add(c, h2);
        add(h2, a);
        planted_used += 3;
        helper += 2;
    }
    // Leftover planted vertices become pendant-edge blocks, or chain up
    // when the helper pool is exhausted.
    while (planted_used < k) {
        if (helper < core) {
            add(planted_used, helper);
            ++helper;
        } else if (planted_used + 1 < k) {
            add(planted_used, planted_used + 1);
        }
        ++planted_used;
    }
    // Sparse extra attachments for irregularity; still planted-incident.
    for (int i = 0; i < k; ++i) {
        if (draw(rng, 3) != 0) continue;
        Vertex t = static_cast<Vertex>(draw(rng, static_cast<std::uint64_t>(core)));
        add(i, t);
    }
    return {Graph::from_edges(n, edges), k};
}

}  // namespace

Instance generate_instance(InstanceKind kind, int n, double param, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("generate_instance: n must be >= 0");
    switch (kind) {
        case InstanceKind::gnp:
            return generate_gnp(n, param, seed);
        case InstanceKind::planted_vc:
            return generate_planted(n, static_cast<int>(param), seed);
    }
    throw std::invalid_argument("generate_instance: unknown kind");
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool set_contains(const VertexSet& s, Vertex v) {
    return std::binary_search(s.begin(), s.end(), v);
}

bool sets_disjoint(const VertexSet& a, const VertexSet& b) {
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib)
            ++ia;
        else if (*ib < *ia)
            ++ib;
        else
            return false;
    }
    return true;
}

VertexSet normalized(VertexSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

}  // namespace parfpt
