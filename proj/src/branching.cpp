#include "parfpt/branching.hpp"

#include <algorithm>
#include <stdexcept>

namespace parfpt {

namespace {

double ipow(double x, int e) {
    double r = 1.0;
    for (int i = 0; i < e; ++i) r *= x;
    return r;
}

// Residual view of G - P with a fast path for P = {} (the engine always
// materializes, so its partial solutions are empty at rule level).
struct Residual {
    const Graph& input;
    bool identity;
    InducedSubgraph sub;

    Residual(const Graph& g, const VertexSet& partial) : input(g), identity(partial.empty()) {
        if (!identity) sub = delete_vertices(g, partial);
    }
    const Graph& graph() const { return identity ? input : sub.graph; }
    Vertex to_input(Vertex v) const { return identity ? v : sub.original_ids[v]; }
    VertexSet to_input(const VertexSet& s) const {
        if (identity) return s;
        VertexSet out;
        out.reserve(s.size());
        for (Vertex v : s) out.push_back(sub.original_ids[v]);
        return normalized(std::move(out));
    }
};

int remaining_budget(int k, const VertexSet& partial) {
    return k - static_cast<int>(partial.size());
}

}  // namespace

double branching_number(const BranchingVector& d) {
    if (d.d.empty()) throw std::invalid_argument("branching vector must be nonempty");
    for (int di : d.d)
        if (di < 1) throw std::invalid_argument("branching vector entries must be >= 1");
    auto p = [&](double x) {
        double s = 1.0;
        for (int di : d.d) s -= ipow(x, di);
        return s;
    };
    // p(0+) = 1 > 0 and p(1) = 1 - m <= 0, p strictly decreasing on (0,1].
    if (d.d.size() == 1) return 1.0;  // p(1) = 0 exactly
    double lo = 1e-12, hi = 1.0;
    while (hi - lo > 1e-12) {
        double mid = 0.5 * (lo + hi);
        (p(mid) > 0.0 ? lo : hi) = mid;
    }
    return 1.0 / (0.5 * (lo + hi));
}

double family_branching_number(const BranchingFamily& D) {
    if (D.vectors.empty()) throw std::invalid_argument("branching family must be nonempty");
    if (D.tail == BranchingFamily::Tail::undeclared_infinite)
        throw std::invalid_argument("infinite family without a dominated-tail declaration");
    double xi = 0.0;
    for (const auto& d : D.vectors) xi = std::max(xi, branching_number(d));
    return xi;
}

int predicted_depth_bound(const BranchingFamily& D, int k) {
    if (k < 0) throw std::invalid_argument("k must be >= 0");
    if (D.vectors.empty()) throw std::invalid_argument("branching family must be nonempty");
    int max_min = 1;
    for (const auto& d : D.vectors) {
        int mn = *std::min_element(d.d.begin(), d.d.end());
        max_min = std::max(max_min, mn);
    }
    return (k + max_min - 1) / max_min;
}

bool solve_degree_two(const Graph& g, int budget) {
    return static_cast<int>(degree_two_optimal_cover(g).size()) <= budget;
}

VertexSet degree_two_optimal_cover(const Graph& g) {
    const int n = g.vertex_count();
    if (g.max_degree() > 2) throw std::invalid_argument("solve_degree_two: maximum degree exceeds 2");
    std::vector<char> visited(n, 0);
    VertexSet cover;

    auto walk = [&](Vertex start, bool cycle) {
        // Collects the component in order; takes odd positions, plus
        // position 0 for odd cycles.
        std::vector<Vertex> order;
        Vertex prev = -1, cur = start;
        while (cur >= 0 && !visited[cur]) {
            visited[cur] = 1;
            order.push_back(cur);
            Vertex next = -1;
            for (Vertex w : g.neighbors(cur))
                if (w != prev && !visited[w]) {
                    next = w;
                    break;
                }
            prev = cur;
            cur = next;
        }
        for (std::size_t i = 1; i < order.size(); i += 2) cover.push_back(order[i]);
        if (cycle && order.size() % 2 == 1 && order.size() >= 3) cover.push_back(order[0]);
    };

    for (Vertex v = 0; v < n; ++v)
        if (!visited[v] && g.degree(v) <= 1) walk(v, false);  // paths and isolated vertices
    for (Vertex v = 0; v < n; ++v)
        if (!visited[v]) walk(v, true);  // remaining components are cycles
    return normalized(std::move(cover));
}

RuleImplementation vc_edge_rule() {
    RuleImplementation r;
    r.name = "edge";
    r.family.vectors = {BranchingVector{{1, 1}}};
    r.structure_bound = [](const Graph&) { return 1; };
    r.decide = [](const Graph& g, int k, const VertexSet& partial) -> Decision {
        int budget = remaining_budget(k, partial);
        if (budget < 0) return {Answer::no, {}};
        Residual res(g, partial);
        if (res.graph().edge_count() == 0) return {Answer::yes, {}};
        if (budget == 0) return {Answer::no, {}};
        return {};
    };
    r.choices = [](const Graph& g, int, const VertexSet& partial) {
        Residual res(g, partial);
        std::vector<VertexSet> out;
        out.reserve(static_cast<std::size_t>(res.graph().edge_count()));
        res.graph().for_each_edge(
            [&](Vertex u, Vertex v) { out.push_back(normalized({res.to_input(u), res.to_input(v)})); });
        if (out.empty()) throw std::invalid_argument("edge rule choices: residual graph has no edges");
        return out;
    };
    r.pick_first = [](const Graph& g, int, const VertexSet& partial) -> VertexSet {
        Residual res(g, partial);
        const Graph& rg = res.graph();
        for (Vertex u = 0; u < rg.vertex_count(); ++u)
            for (Vertex v : rg.neighbors(u))
                if (u < v) return normalized({res.to_input(u), res.to_input(v)});
        throw std::invalid_argument("edge rule choices: residual graph has no edges");
    };
    r.branches = [](const Graph& g, int, const VertexSet& partial, const VertexSet& s) {
        if (s.size() != 2 || !g.has_edge(s[0], s[1]) || set_contains(partial, s[0]) ||
            set_contains(partial, s[1]))
            throw std::invalid_argument("edge rule branches: structure is not an edge of G - P");
        return std::vector<VertexSet>{{s[0]}, {s[1]}};
    };
    r.decide_touches = [](const Graph&) { return std::int64_t{1}; };  // O(1) edge probe
    r.choices_touches = [](const Graph& rg) { return std::max<std::int64_t>(1, rg.edge_count()); };
    return r;
}

RuleImplementation vc_degree_rule() {
    RuleImplementation r;
    r.name = "degree";
    r.family.vectors = {BranchingVector{{1, 3}}};
    r.family.tail = BranchingFamily::Tail::dominated_by_listed;  // (1,4),(1,5),... have smaller xi
    r.structure_bound = [](const Graph& root) { return std::max(1, root.max_degree()); };
    r.decide = [](const Graph& g, int k, const VertexSet& partial) -> Decision {
        int budget = remaining_budget(k, partial);
        if (budget < 0) return {Answer::no, {}};
        Residual res(g, partial);
        const Graph& rg = res.graph();
        if (rg.max_degree() > 2) return {};
        VertexSet cover = degree_two_optimal_cover(rg);
        if (static_cast<int>(cover.size()) > budget) return {Answer::no, {}};
        return {Answer::yes, res.to_input(cover)};
    };
    r.choices = [](const Graph& g, int, const VertexSet& partial) {
        Residual res(g, partial);
        const Graph& rg = res.graph();
        std::vector<VertexSet> out;
        for (Vertex v = 0; v < rg.vertex_count(); ++v) {
            if (rg.degree(v) < 3) continue;
            VertexSet closed{v};
            for (Vertex w : rg.neighbors(v)) closed.push_back(w);
            out.push_back(res.to_input(normalized(std::move(closed))));
        }
        if (out.empty())
            throw std::invalid_argument("degree rule choices: no vertex of degree >= 3 in G - P");
        return out;
    };
    r.pick_first = [](const Graph& g, int, const VertexSet& partial) -> VertexSet {
        Residual res(g, partial);
        const Graph& rg = res.graph();
        for (Vertex v = 0; v < rg.vertex_count(); ++v) {
            if (rg.degree(v) < 3) continue;
            VertexSet closed{v};
            for (Vertex w : rg.neighbors(v)) closed.push_back(w);
            return res.to_input(normalized(std::move(closed)));
        }
        throw std::invalid_argument("degree rule choices: no vertex of degree >= 3 in G - P");
    };
    r.branches = [](const Graph& g, int, const VertexSet& partial, const VertexSet& s) {
        // S must be the closed residual neighborhood of one of its members
        // with residual degree >= 3; the smallest such member is the center.
        Residual res(g, partial);
        const Graph& rg = res.graph();
        std::vector<int> to_res(g.vertex_count(), -1);
        for (Vertex v = 0; v < rg.vertex_count(); ++v) to_res[res.to_input(v)] = v;
        for (Vertex center : s) {
            if (center < 0 || center >= g.vertex_count() || to_res[center] < 0) continue;
            Vertex c = to_res[center];
            if (rg.degree(c) < 3) continue;
            VertexSet closed{center};
            for (Vertex w : rg.neighbors(c)) closed.push_back(res.to_input(w));
            closed = normalized(std::move(closed));
            if (closed == s) {
                VertexSet rest;
                for (Vertex v : s)
                    if (v != center) rest.push_back(v);
                return std::vector<VertexSet>{{center}, rest};
            }
        }
        throw std::invalid_argument(
            "degree rule branches: structure is not a closed neighborhood of a degree->=3 vertex");
    };
    r.decide_touches = [](const Graph& rg) { return std::max<std::int64_t>(1, rg.size_measure()); };
    r.choices_touches = [](const Graph& rg) { return std::max<std::int64_t>(1, rg.size_measure()); };
    return r;
}

RuleImplementation vc_matching_rule() {
    RuleImplementation r;
    r.name = "matching";
    r.family.vectors = {BranchingVector{{1, 1}}};
    r.structure_bound = [](const Graph&) { return 1; };
    r.decide = [](const Graph& g, int k, const VertexSet& partial) -> Decision {
        int budget = remaining_budget(k, partial);
        if (budget < 0) return {Answer::no, {}};
        Residual res(g, partial);
        const Graph& rg = res.graph();
        if (rg.edge_count() == 0) return {Answer::yes, {}};
        EdgeSet m = maximal_matching(rg);
        if (static_cast<int>(m.size()) > budget) return {Answer::no, {}};
        if (2 * static_cast<int>(m.size()) <= budget) {
            VertexSet endpoints;
            for (const Edge& e : m) {
                endpoints.push_back(res.to_input(e.u));
                endpoints.push_back(res.to_input(e.v));
            }
            return {Answer::yes, normalized(std::move(endpoints))};
        }
        return {};
    };
    r.choices = [](const Graph& g, int, const VertexSet& partial) {
        Residual res(g, partial);
        EdgeSet m = maximal_matching(res.graph());
        if (m.empty()) throw std::invalid_argument("matching rule choices: residual graph has no edges");
        std::vector<VertexSet> out;
        out.reserve(m.size());
        for (const Edge& e : m) out.push_back(normalized({res.to_input(e.u), res.to_input(e.v)}));
        return out;
    };
    r.pick_first = [](const Graph& g, int, const VertexSet& partial) -> VertexSet {
        Residual res(g, partial);
        EdgeSet m = maximal_matching(res.graph());
        if (m.empty()) throw std::invalid_argument("matching rule choices: residual graph has no edges");
        return normalized({res.to_input(m.front().u), res.to_input(m.front().v)});
    };
    r.branches = [](const Graph& g, int, const VertexSet& partial, const VertexSet& s) {
        if (s.size() != 2 || !g.has_edge(s[0], s[1]) || set_contains(partial, s[0]) ||
            set_contains(partial, s[1]))
            throw std::invalid_argument("matching rule branches: structure is not an edge of G - P");
        return std::vector<VertexSet>{{s[0]}, {s[1]}};
    };
    r.decide_touches = [](const Graph& rg) { return std::max<std::int64_t>(1, rg.size_measure()); };
    r.choices_touches = [](const Graph& rg) { return std::max<std::int64_t>(1, rg.size_measure()); };
    r.decide_span_exp = 3;   // maximal matching, charged as an O(log^3) primitive
    r.choices_span_exp = 3;
    return r;
}

namespace {

BranchStep decide_step(const RuleImplementation& rule, const Graph& g, int k,
                       const VertexSet& partial, const Graph& rg) {
    BranchStep step;
    step.charge += parallel_charge(rule.decide_touches(rg), rule.decide_span_exp);
    Decision dec = rule.decide(g, k, partial);
    if (dec.verdict) {
        step.verdict = dec.verdict;
        step.completion = std::move(dec.completion);
    }
    return step;
}

void finish_step(BranchStep& step) {
    if (step.branches.empty()) {
        step.verdict = Answer::no;  // every branch combination overspends the budget
        step.completion.clear();
    }
}

}  // namespace

BranchStep b_one(const RuleImplementation& rule, const Graph& g, int k, const VertexSet& partial) {
    if (static_cast<int>(partial.size()) > k)
        throw std::invalid_argument("b_one: partial solution exceeds budget");
    Residual res(g, partial);
    const Graph& rg = res.graph();
    BranchStep step = decide_step(rule, g, k, partial, rg);
    if (step.verdict) return step;

    step.charge += parallel_charge(rule.choices_touches(rg), rule.choices_span_exp);
    VertexSet s = rule.pick_first(g, k, partial);
    auto family = rule.branches(g, k, partial, s);
    step.charge += parallel_charge(static_cast<std::int64_t>(s.size()), 1);
    step.packed_count = 1;
    const int budget = remaining_budget(k, partial);
    for (auto& x : family) {
        const int spent = static_cast<int>(x.size());
        if (spent <= budget) step.branches.push_back({std::move(x), spent});
    }
    finish_step(step);
    return step;
}

BranchStep b_star(const RuleImplementation& rule, const Graph& g, int k, const VertexSet& partial,
                  int structure_bound) {
    if (static_cast<int>(partial.size()) > k)
        throw std::invalid_argument("b_star: partial solution exceeds budget");
    if (structure_bound < 1) throw std::invalid_argument("b_star: structure bound must be >= 1");
    Residual res(g, partial);
    const Graph& rg = res.graph();
    BranchStep step = decide_step(rule, g, k, partial, rg);
    if (step.verdict) return step;

    step.charge += parallel_charge(rule.choices_touches(rg), rule.choices_span_exp);
    auto choices = rule.choices(g, k, partial);
    const int budget = remaining_budget(k, partial);
    const int cap = std::max(1, budget / (structure_bound + 1));
    std::int64_t packing_touches = rg.vertex_count();
    for (const auto& s : choices) packing_touches += static_cast<std::int64_t>(s.size());
    step.charge += parallel_charge(packing_touches, 4);
    auto packing = maximal_set_packing(choices, cap);
    step.packed_count = static_cast<int>(packing.size());

    // Branch families per packed structure; independent, so spans max out.
    std::vector<std::vector<VertexSet>> families;
    families.reserve(packing.size());
    std::int64_t branch_work = 0, branch_span = 0;
    double product = 1.0;
    for (const auto& s : packing) {
        families.push_back(rule.branches(g, k, partial, s));
        product *= static_cast<double>(families.back().size());
        Charge c = parallel_charge(static_cast<std::int64_t>(s.size()), 1);
        branch_work += c.work;
        branch_span = std::max(branch_span, c.span);
    }
    step.charge += Charge{branch_work, branch_span};
    if (product > 1e8)
        throw std::runtime_error("b_star: branch product of " + std::to_string(product) +
                                 " combinations exceeds the resource limit");

    // Cartesian product in odometer order, last structure fastest.
    for (const auto& f : families)
        if (f.empty()) throw std::invalid_argument("b_star: branches returned an empty family");
    std::vector<std::size_t> idx(families.size(), 0);
    bool done = false;
    while (!done) {
        VertexSet combined;
        for (std::size_t i = 0; i < families.size(); ++i)
            combined = set_union(combined, families[i][idx[i]]);
        const int spent = static_cast<int>(combined.size());
        if (spent <= budget) {
            // Shallow-interleaving guarantee: spent <= (1 - 1/(s+1)) * budget + s.
            if (static_cast<long long>(spent) * (structure_bound + 1) >
                static_cast<long long>(structure_bound) * (budget + structure_bound + 1))
                throw std::logic_error("b_star: branch overspends the epsilon budget guarantee");
            step.branches.push_back({std::move(combined), spent});
        }
        done = true;
        std::size_t pos = families.size();
        while (pos > 0) {
            --pos;
            if (++idx[pos] < families[pos].size()) {
                done = false;
                break;
            }
            idx[pos] = 0;
        }
    }
    finish_step(step);
    return step;
}

BranchStep b_star(const RuleImplementation& rule, const Graph& g, int k, const VertexSet& partial) {
    return b_star(rule, g, k, partial, rule.structure_bound(g));
}

}  // namespace parfpt
