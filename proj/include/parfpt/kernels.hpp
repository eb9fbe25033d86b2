#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "parfpt/cost.hpp"
#include "parfpt/graph.hpp"

namespace parfpt {

// Per-stage record of one kernel application.
struct StageReport {
    std::string name;
    int in_vertices = 0;
    std::int64_t in_edges = 0;
    int in_k = 0;
    int out_vertices = 0;
    std::int64_t out_edges = 0;
    int out_k = 0;
    std::int64_t work = 0;  // touches

    std::int64_t in_size() const { return in_vertices + in_edges; }
    std::int64_t out_size() const { return static_cast<std::int64_t>(out_vertices) + out_edges; }
};

// Result of a kernelization (or a cascade of them): either an early
// verdict or a reduced instance, plus the vertices resolved on the way.
// Forced vertices belong to every solution within budget; on a yes
// verdict they are a complete cover. Ids are in the input instance's space.
struct KernelOutcome {
    std::optional<Answer> verdict;
    std::optional<Instance> reduced;
    std::vector<Vertex> reduced_to_input;  // reduced id -> input id, valid with reduced
    VertexSet forced;
    VertexSet discarded;
    std::vector<StageReport> stages;

    std::int64_t total_work() const {
        std::int64_t w = 0;
        for (const auto& s : stages) w += s.work;
        return w;
    }
};

// Symbolic description of a kernel: size bound s_K, cost orders, and the
// procedure itself.
struct KernelSpec {
    std::string name;
    std::function<std::int64_t(int)> size_bound;  // s_K(k), in `measure`
    enum class Measure { edges, vertices } measure = Measure::edges;
    enum class SpanMode { polylog, sequential } span_mode = SpanMode::sequential;
    int polylog_exp = 1;
    bool polynomial_size = true;
    std::function<KernelOutcome(const Instance&)> apply;

    // Span charge for an invocation that performed `touches` work.
    Charge charge_of(std::int64_t touches) const {
        return span_mode == SpanMode::polylog ? parallel_charge(touches, polylog_exp)
                                              : sequential_charge(touches);
    }
};

// Buss kernel: force degree > k vertices, discard isolated ones; at most
// k^2 edges remain or the instance is a no. Linear work, polylog span.
KernelOutcome buss_kernel(const Instance& inst);
KernelSpec buss_kernel_spec();

// LP (half-integral relaxation) kernel via the bipartite double cover and
// its Koenig cover: x = 1 forced, x = 0 discarded, at most 2k half vertices
// remain. Charged sequential.
KernelOutcome lp_kernel(const Instance& inst);
KernelSpec lp_kernel_spec();

// An ordered kernel cascade. Construction rejects stage orders whose size
// bounds are not strictly decreasing (checked at probe parameters
// k in {8, 16, 32, 64}).
class Cascade {
public:
    explicit Cascade(std::vector<KernelSpec> stages);

    // Applies stages in order with id translation, short-circuiting on a
    // verdict; the stage reports record each stage's input size.
    KernelOutcome apply(const Instance& inst) const;

    const std::vector<KernelSpec>& stages() const { return stages_; }
    std::string name() const;

private:
    std::vector<KernelSpec> stages_;
};

// Measured cost split of a run if the first r stages ran as parallel
// (polylog-span) kernels and the rest sequentially: the residual
// sequential term depends only on the prefix's output size.
struct PrefixParallelReport {
    int r = 0;
    std::int64_t prefix_work = 0;
    std::int64_t prefix_span = 0;  // polylog-charged span of stages 1..r
    std::int64_t tail_work = 0;    // sequential work of stages r+1..t
    std::vector<StageReport> stages;
};
PrefixParallelReport cascade_prefix_parallel_report(const Cascade& cascade,
                                                    const std::vector<StageReport>& run_stages,
                                                    int r);

}  // namespace parfpt
