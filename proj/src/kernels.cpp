#include "parfpt/kernels.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace parfpt {

namespace {

StageReport start_report(const std::string& name, const Instance& inst) {
    StageReport r;
    r.name = name;
    r.in_vertices = inst.graph.vertex_count();
    r.in_edges = inst.graph.edge_count();
    r.in_k = inst.k;
    return r;
}

void close_report(StageReport& r, const KernelOutcome& out, int k_on_verdict) {
    if (out.reduced) {
        r.out_vertices = out.reduced->graph.vertex_count();
        r.out_edges = out.reduced->graph.edge_count();
        r.out_k = out.reduced->k;
    } else {
        r.out_vertices = 0;
        r.out_edges = 0;
        r.out_k = k_on_verdict;
    }
}

std::vector<Vertex> identity_map(int n) {
    std::vector<Vertex> m(n);
    std::iota(m.begin(), m.end(), 0);
    return m;
}

}  // namespace

KernelOutcome buss_kernel(const Instance& inst) {
    const Graph& g = inst.graph;
    const int n = g.vertex_count();
    KernelOutcome out;
    StageReport report = start_report("buss", inst);

    std::vector<int> deg(n);
    for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::vector<char> dead(n, 0);
    int k = inst.k;
    std::int64_t touches = n;

    // Force high-degree vertices, smallest id first, until none exceeds
    // the current budget.
    bool again = true;
    while (again && k >= 0) {
        again = false;
        for (Vertex v = 0; v < n; ++v) {
            ++touches;
            if (dead[v] || deg[v] <= k) continue;
            dead[v] = 1;
            out.forced.push_back(v);
            --k;
            touches += g.degree(v);
            for (Vertex w : g.neighbors(v))
                if (!dead[w]) --deg[w];
            again = true;
            break;
        }
    }
    out.forced = normalized(std::move(out.forced));
    if (k < 0) {
        out.verdict = Answer::no;
        report.work = touches;
        close_report(report, out, k);
        out.stages.push_back(std::move(report));
        return out;
    }

    std::int64_t remaining_edges = 0;
    for (Vertex v = 0; v < n; ++v) {
        ++touches;
        if (dead[v]) continue;
        if (deg[v] == 0) {
            dead[v] = 1;
            out.discarded.push_back(v);
        } else {
            remaining_edges += deg[v];
        }
    }
    remaining_edges /= 2;

    if (remaining_edges > static_cast<std::int64_t>(k) * k) {
        out.verdict = Answer::no;  // s_Buss(k) = k^2 edges exceeded
    } else if (remaining_edges == 0) {
        out.verdict = Answer::yes;  // forced vertices cover everything
    } else {
        auto sub = delete_vertices(g, normalized(set_union(out.forced, out.discarded)));
        touches += g.size_measure();
        out.reduced = Instance{std::move(sub.graph), k};
        out.reduced_to_input = std::move(sub.original_ids);
    }
    report.work = touches;
    close_report(report, out, k);
    out.stages.push_back(std::move(report));
    return out;
}

KernelSpec buss_kernel_spec() {
    KernelSpec s;
    s.name = "buss";
    s.size_bound = [](int k) { return static_cast<std::int64_t>(k) * k; };
    s.measure = KernelSpec::Measure::edges;
    s.span_mode = KernelSpec::SpanMode::polylog;
    s.polylog_exp = 1;
    s.apply = buss_kernel;
    return s;
}

KernelOutcome lp_kernel(const Instance& inst) {
    const Graph& g = inst.graph;
    const int n = g.vertex_count();
    const int k = inst.k;
    KernelOutcome out;
    StageReport report = start_report("lp", inst);

    // Bipartite double cover: (u_L, v_R) and (v_L, u_R) per edge {u,v}.
    std::vector<std::pair<int, int>> cover_edges;
    cover_edges.reserve(static_cast<std::size_t>(2 * g.edge_count()));
    g.for_each_edge([&](Vertex u, Vertex v) {
        cover_edges.emplace_back(u, v);
        cover_edges.emplace_back(v, u);
    });
    BipartiteMatching bm = maximum_bipartite_matching(n, n, cover_edges);
    std::int64_t touches = g.size_measure() + bm.touches;

    // x_v in half-units: 0, 1 (=1/2), or 2 (=1); LP value doubled is |C|.
    std::vector<int> x2(n, 0);
    for (Vertex v : bm.left_cover) ++x2[v];
    for (Vertex v : bm.right_cover) ++x2[v];
    std::int64_t doubled_value = bm.left_cover.size() + bm.right_cover.size();

    if (doubled_value > 2 * static_cast<std::int64_t>(k)) {
        out.verdict = Answer::no;  // LP optimum already exceeds the budget
        report.work = touches;
        close_report(report, out, k);
        out.stages.push_back(std::move(report));
        return out;
    }
    for (Vertex v = 0; v < n; ++v) {
        if (x2[v] == 2)
            out.forced.push_back(v);
        else if (x2[v] == 0)
            out.discarded.push_back(v);
    }
    const int k_rest = k - static_cast<int>(out.forced.size());
    auto sub = delete_vertices(g, normalized(set_union(out.forced, out.discarded)));
    touches += g.size_measure();
    if (sub.graph.edge_count() == 0) {
        out.verdict = Answer::yes;
        if (sub.graph.vertex_count() > 0) {
            // Stray half vertices without half neighbors are not needed.
            for (Vertex v : sub.original_ids) out.discarded.push_back(v);
            out.discarded = normalized(std::move(out.discarded));
        }
    } else {
        out.reduced = Instance{std::move(sub.graph), k_rest};
        out.reduced_to_input = std::move(sub.original_ids);
    }
    report.work = touches;
    close_report(report, out, k_rest);
    out.stages.push_back(std::move(report));
    return out;
}

KernelSpec lp_kernel_spec() {
    KernelSpec s;
    s.name = "lp";
    s.size_bound = [](int k) { return 2 * static_cast<std::int64_t>(k); };
    s.measure = KernelSpec::Measure::vertices;
    s.span_mode = KernelSpec::SpanMode::sequential;
    s.apply = lp_kernel;
    return s;
}

Cascade::Cascade(std::vector<KernelSpec> stages) : stages_(std::move(stages)) {
    if (stages_.empty()) throw std::invalid_argument("cascade: needs at least one stage");
    for (std::size_t i = 0; i + 1 < stages_.size(); ++i)
        for (int k : {8, 16, 32, 64})
            if (stages_[i].size_bound(k) <= stages_[i + 1].size_bound(k))
                throw std::invalid_argument("cascade: size bounds must strictly decrease (" +
                                            stages_[i].name + " vs " + stages_[i + 1].name + ")");
}

std::string Cascade::name() const {
    std::string s;
    for (const auto& st : stages_) {
        if (!s.empty()) s += ",";
        s += st.name;
    }
    return s;
}

KernelOutcome Cascade::apply(const Instance& inst) const {
    KernelOutcome acc;
    Instance cur = inst;
    std::vector<Vertex> to_input = identity_map(inst.graph.vertex_count());

    for (const auto& stage : stages_) {
        KernelOutcome step = stage.apply(cur);
        for (Vertex v : step.forced) acc.forced.push_back(to_input[v]);
        for (Vertex v : step.discarded) acc.discarded.push_back(to_input[v]);
        acc.stages.insert(acc.stages.end(), step.stages.begin(), step.stages.end());
        if (step.verdict) {
            acc.verdict = step.verdict;
            acc.forced = normalized(std::move(acc.forced));
            acc.discarded = normalized(std::move(acc.discarded));
            return acc;
        }
        std::vector<Vertex> composed(step.reduced_to_input.size());
        for (std::size_t i = 0; i < composed.size(); ++i)
            composed[i] = to_input[step.reduced_to_input[i]];
        to_input = std::move(composed);
        cur = std::move(*step.reduced);
    }
    acc.forced = normalized(std::move(acc.forced));
    acc.discarded = normalized(std::move(acc.discarded));
    acc.reduced = std::move(cur);
    acc.reduced_to_input = std::move(to_input);
    return acc;
}

PrefixParallelReport cascade_prefix_parallel_report(const Cascade& cascade,
                                                    const std::vector<StageReport>& run_stages,
                                                    int r) {
    const int t = static_cast<int>(cascade.stages().size());
    if (r < 1 || r > t) throw std::invalid_argument("prefix report: r out of range");
    PrefixParallelReport rep;
    rep.r = r;
    rep.stages = run_stages;
    for (std::size_t i = 0; i < run_stages.size(); ++i) {
        if (static_cast<int>(i) < r) {
            rep.prefix_work += run_stages[i].work;
            rep.prefix_span +=
                polylog_span(run_stages[i].work, cascade.stages()[i].polylog_exp);
        } else {
            rep.tail_work += run_stages[i].work;
        }
    }
    return rep;
}

}  // namespace parfpt
