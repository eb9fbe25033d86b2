#include "parfpt/engine.hpp"

#include <atomic>
#include <chrono>
#include <deque>
#include <numeric>
#include <thread>

namespace parfpt {

std::string RunConfig::fingerprint() const {
    std::string fp = "rule=" + rule.name;
    fp += ";branch=";
    fp += branch_mode == BranchMode::b1 ? "b1" : "bstar";
    fp += ";init=";
    fp += init_kernel ? init_kernel->name() : "none";
    fp += ";interleave=";
    fp += interleave_kernel ? interleave_kernel->name : "none";
    fp += ";accounting=";
    fp += accounting == Accounting::exhaustive ? "exhaustive" : "fast";
    return fp;
}

double estimate_wall_time(const RunMetrics& metrics, int p) {
    if (p < 1) throw std::invalid_argument("estimate_wall_time: p must be >= 1");
    return static_cast<double>(metrics.work_units) / p + static_cast<double>(metrics.span_units);
}

bool verify_witness(const Graph& g, const VertexSet& cover) {
    for (Vertex v : cover)
        if (v < 0 || v >= g.vertex_count()) return false;
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        if (set_contains(cover, u)) continue;
        for (Vertex w : g.neighbors(u))
            if (w > u && !set_contains(cover, w)) return false;
    }
    return true;
}

SubtreeAggregate aggregate_leaf(const Charge& node_charge, bool yes, VertexSet witness) {
    SubtreeAggregate a;
    a.yes = yes;
    a.witness = std::move(witness);
    a.work = node_charge.work;
    a.path_span = node_charge.span;
    a.tree_size = 1;
    a.depth = 0;
    a.max_node_work = node_charge.work;
    a.max_node_span = node_charge.span;
    return a;
}

SubtreeAggregate aggregate_children(const Charge& node_charge,
                                    std::span<const SubtreeAggregate> children) {
    SubtreeAggregate a;
    a.work = node_charge.work;
    a.path_span = 0;
    a.tree_size = 1;
    a.depth = 0;
    a.max_node_work = node_charge.work;
    a.max_node_span = node_charge.span;
    for (const auto& c : children) {
        a.work += c.work;
        a.path_span = std::max(a.path_span, c.path_span);
        a.tree_size += c.tree_size;
        a.depth = std::max(a.depth, c.depth + 1);
        a.max_node_work = std::max(a.max_node_work, c.max_node_work);
        a.max_node_span = std::max(a.max_node_span, c.max_node_span);
        if (!a.yes && c.yes) {  // leftmost yes wins
            a.yes = true;
            a.witness = c.witness;
        }
    }
    a.path_span += node_charge.span;
    return a;
}

namespace {

struct NodeState {
    Instance inst;                    // residual instance
    std::vector<Vertex> to_original;  // inst ids -> original ids
    VertexSet chosen;                 // original ids committed on this path
};

struct Context {
    const RuleImplementation& rule;
    BranchMode mode;
    const KernelSpec* interleave;
    int structure_bound;
    bool fast;
    std::optional<std::int64_t> node_budget;
    std::atomic<std::int64_t> nodes{0};
    std::atomic<bool> stop{false};
};

VertexSet map_to_original(const std::vector<Vertex>& to_original, const VertexSet& s) {
    VertexSet out;
    out.reserve(s.size());
    for (Vertex v : s) out.push_back(to_original[v]);
    return normalized(std::move(out));
}

struct Processed {
    Charge charge;
    std::optional<Answer> verdict;
    VertexSet witness;  // original ids, valid on yes
    std::vector<NodeState> children;
};

Processed process_node(Context& ctx, NodeState&& st) {
    if (ctx.node_budget && ctx.nodes.fetch_add(1) + 1 > *ctx.node_budget)
        throw NodeBudgetExceeded("node budget of " + std::to_string(*ctx.node_budget) +
                                 " nodes exceeded");
    Processed p;
    p.charge = Charge{1, 1};  // node overhead

    if (ctx.interleave) {
        KernelOutcome out = ctx.interleave->apply(st.inst);
        p.charge += ctx.interleave->charge_of(out.total_work());
        VertexSet forced = map_to_original(st.to_original, out.forced);
        if (out.verdict) {
            p.verdict = out.verdict;
            if (*out.verdict == Answer::yes) p.witness = set_union(st.chosen, forced);
            return p;
        }
        st.chosen = set_union(st.chosen, forced);
        std::vector<Vertex> composed(out.reduced_to_input.size());
        for (std::size_t i = 0; i < composed.size(); ++i)
            composed[i] = st.to_original[out.reduced_to_input[i]];
        st.to_original = std::move(composed);
        st.inst = std::move(*out.reduced);
    }

    BranchStep step = ctx.mode == BranchMode::b1
                          ? b_one(ctx.rule, st.inst.graph, st.inst.k, {})
                          : b_star(ctx.rule, st.inst.graph, st.inst.k, {}, ctx.structure_bound);
    p.charge += step.charge;
    if (step.verdict) {
        p.verdict = step.verdict;
        if (*step.verdict == Answer::yes)
            p.witness = set_union(st.chosen, map_to_original(st.to_original, step.completion));
        return p;
    }

    // Children are constructed in branch order; construction work is charged
    // per child, its span once (children materialize in parallel).
    const std::int64_t materialize = st.inst.graph.size_measure();
    p.children.reserve(step.branches.size());
    for (const Branch& b : step.branches) {
        auto sub = delete_vertices(st.inst.graph, b.added);
        NodeState child;
        child.inst = Instance{std::move(sub.graph), st.inst.k - b.budget_spent};
        child.to_original.resize(sub.original_ids.size());
        for (std::size_t i = 0; i < sub.original_ids.size(); ++i)
            child.to_original[i] = st.to_original[sub.original_ids[i]];
        child.chosen = set_union(st.chosen, map_to_original(st.to_original, b.added));
        p.children.push_back(std::move(child));
    }
    p.charge.work += materialize * static_cast<std::int64_t>(p.children.size());
    p.charge.span += polylog_span(materialize, 1);
    return p;
}

SubtreeAggregate aggregate_of(Context& ctx, Processed&& p) {
    bool yes = p.verdict && *p.verdict == Answer::yes;
    if (yes && ctx.fast) ctx.stop.store(true, std::memory_order_relaxed);
    return aggregate_leaf(p.charge, yes, std::move(p.witness));
}

// Sequential depth-first exploration with an explicit frame stack; the
// fold over completed frames reproduces the cost model's tree quantities.
SubtreeAggregate explore_subtree(Context& ctx, NodeState&& root) {
    struct Frame {
        Charge charge;
        std::vector<NodeState> children;
        std::size_t next = 0;
        std::vector<SubtreeAggregate> results;
    };
    Processed p = process_node(ctx, std::move(root));
    if (p.children.empty()) return aggregate_of(ctx, std::move(p));

    std::vector<Frame> stack;
    stack.push_back(Frame{p.charge, std::move(p.children), 0, {}});
    std::optional<SubtreeAggregate> pending;
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (pending) {
            f.results.push_back(std::move(*pending));
            pending.reset();
        }
        if (f.next == f.children.size()) {
            pending = aggregate_children(f.charge, f.results);
            stack.pop_back();
            continue;
        }
        NodeState st = std::move(f.children[f.next++]);
        if (ctx.fast && ctx.stop.load(std::memory_order_relaxed)) {
            pending = SubtreeAggregate{};  // abandoned: someone already found yes
            pending->tree_size = 0;
            continue;
        }
        Processed q = process_node(ctx, std::move(st));
        if (q.children.empty())
            pending = aggregate_of(ctx, std::move(q));
        else
            stack.push_back(Frame{q.charge, std::move(q.children), 0, {}});
    }
    return *pending;
}

// Parallel exploration: expand the top of the tree breadth-first until
// enough independent subtree tasks exist, run them on a worker pool, then
// fold the expanded top. The fold is over the same deterministic tree as
// the sequential traversal, so all aggregates are schedule-independent.
struct TopNode {
    Charge charge;
    std::optional<SubtreeAggregate> leaf;
    std::vector<TopNode> children;
    std::optional<NodeState> pending;
};

SubtreeAggregate fold_top(const TopNode& node) {
    if (node.leaf) return *node.leaf;
    std::vector<SubtreeAggregate> child_aggs;
    child_aggs.reserve(node.children.size());
    for (const auto& c : node.children) child_aggs.push_back(fold_top(c));
    return aggregate_children(node.charge, child_aggs);
}

SubtreeAggregate explore_parallel(Context& ctx, NodeState&& root, int workers) {
    const int target_tasks = workers * 16;
    TopNode top;
    top.pending = std::move(root);

    std::deque<TopNode*> frontier{&top};
    int pending_count = 1;
    while (!frontier.empty() && pending_count < target_tasks) {
        TopNode* node = frontier.front();
        frontier.pop_front();
        --pending_count;
        if (ctx.fast && ctx.stop.load(std::memory_order_relaxed)) {
            node->leaf = SubtreeAggregate{};
            node->leaf->tree_size = 0;
            node->pending.reset();
            continue;
        }
        Processed p = process_node(ctx, std::move(*node->pending));
        node->pending.reset();
        node->charge = p.charge;
        if (p.children.empty()) {
            node->leaf = aggregate_of(ctx, std::move(p));
            continue;
        }
        node->children.resize(p.children.size());
        for (std::size_t i = 0; i < p.children.size(); ++i) {
            node->children[i].pending = std::move(p.children[i]);
            frontier.push_back(&node->children[i]);
            ++pending_count;
        }
    }

    std::vector<TopNode*> tasks(frontier.begin(), frontier.end());
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(tasks.size());
    auto work = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            try {
                tasks[i]->leaf = explore_subtree(ctx, std::move(*tasks[i]->pending));
                tasks[i]->pending.reset();
            } catch (...) {
                errors[i] = std::current_exception();
                tasks[i]->leaf = SubtreeAggregate{};
            }
        }
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return fold_top(top);
}

}  // namespace

std::pair<Verdict, RunMetrics> run(const RunConfig& config, const Instance& inst) {
    if (config.worker_count < 1) throw std::invalid_argument("run: worker count must be >= 1");
    if (config.interleave_kernel && !config.interleave_kernel->polynomial_size)
        throw std::invalid_argument("run: interleave kernel must have polynomial size bound");
    if (inst.k < 0) throw std::invalid_argument("run: k must be >= 0");

    const auto t0 = std::chrono::steady_clock::now();
    RunMetrics metrics;
    Charge pre;

    NodeState root;
    root.inst = inst;
    root.to_original.resize(inst.graph.vertex_count());
    std::iota(root.to_original.begin(), root.to_original.end(), 0);

    if (config.init_kernel) {
        KernelOutcome out = config.init_kernel->apply(inst);
        metrics.stages = out.stages;
        for (std::size_t i = 0; i < out.stages.size(); ++i)
            pre += config.init_kernel->stages()[i].charge_of(out.stages[i].work);
        if (out.verdict) {
            metrics.work_units = pre.work;
            metrics.span_units = pre.span;
            metrics.wall_clock_sec =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            Verdict v{*out.verdict, std::nullopt};
            if (v.answer == Answer::yes) v.witness = out.forced;
            return {v, metrics};
        }
        root.inst = std::move(*out.reduced);
        root.to_original = std::move(out.reduced_to_input);
        root.chosen = std::move(out.forced);
    }

    Context ctx{config.rule,
                config.branch_mode,
                config.interleave_kernel ? &*config.interleave_kernel : nullptr,
                config.rule.structure_bound(root.inst.graph),
                config.accounting == Accounting::fast,
                config.node_budget};

    SubtreeAggregate agg =
        (config.exec_mode == ExecMode::parallel && config.worker_count > 1)
            ? explore_parallel(ctx, std::move(root), config.worker_count)
            : explore_subtree(ctx, std::move(root));

    metrics.work_units = pre.work + agg.work;
    metrics.span_units = pre.span + agg.path_span;
    metrics.tree_size = agg.tree_size;
    metrics.tree_depth = agg.depth;
    metrics.max_node_work = agg.max_node_work;
    metrics.max_node_span = agg.max_node_span;
    metrics.wall_clock_sec =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    Verdict v{agg.yes ? Answer::yes : Answer::no, std::nullopt};
    if (agg.yes) v.witness = std::move(agg.witness);
    return {v, metrics};
}

}  // namespace parfpt
