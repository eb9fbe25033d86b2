#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>

#include "parfpt/branching.hpp"
#include "parfpt/cost.hpp"
#include "parfpt/graph.hpp"
#include "parfpt/kernels.hpp"

namespace parfpt {

enum class BranchMode { b1, bstar };
enum class ExecMode { sequential, parallel };

// Exhaustive accounting traverses the full tree so that tree size, work and
// span are schedule-independent model quantities; fast accounting may exit
// early on yes, and then only the verdict is contractual.
enum class Accounting { exhaustive, fast };

struct RunConfig {
    RuleImplementation rule;
    BranchMode branch_mode = BranchMode::b1;
    ExecMode exec_mode = ExecMode::sequential;
    std::optional<Cascade> init_kernel;
    std::optional<KernelSpec> interleave_kernel;
    int worker_count = 1;
    std::optional<std::int64_t> node_budget;
    Accounting accounting = Accounting::exhaustive;

    // Identifies the logical run. Scheduling knobs (exec mode, workers) are
    // excluded: they must not change any reported quantity but wall clock.
    std::string fingerprint() const;
};

struct RunMetrics {
    std::int64_t work_units = 0;   // W: touches summed over all nodes
    std::int64_t span_units = 0;   // T: heaviest root-to-leaf chain of span charges
    std::int64_t tree_size = 0;    // nodes expanded
    int tree_depth = 0;            // branchings on the deepest path
    std::vector<StageReport> stages;  // init cascade stages
    double wall_clock_sec = 0.0;      // informational, schedule-dependent

    // Per-node extrema; not part of the metrics schema.
    std::int64_t max_node_work = 0;
    std::int64_t max_node_span = 0;
};

struct Verdict {
    Answer answer = Answer::no;
    std::optional<VertexSet> witness;  // cover of size <= k in original ids, present iff yes
};

struct NodeBudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Explores the branch tree of `inst` under the configured rule, kernels and
// accounting; returns the verdict with a reconstructed witness and the cost
// model's measurements. Sequential and parallel execution of the same config
// report identical metrics in exhaustive mode.
std::pair<Verdict, RunMetrics> run(const RunConfig& config, const Instance& inst);

// Brent bound W/p + T in cost units.
double estimate_wall_time(const RunMetrics& metrics, int p);

// True iff every edge of g has an endpoint in cover.
bool verify_witness(const Graph& g, const VertexSet& cover);

// Aggregate of an explored subtree. Work adds up; span is the heaviest
// root-to-leaf chain; the witness is the leftmost yes leaf's.
struct SubtreeAggregate {
    bool yes = false;
    VertexSet witness;
    std::int64_t work = 0;
    std::int64_t path_span = 0;
    std::int64_t tree_size = 0;
    int depth = 0;
    std::int64_t max_node_work = 0;
    std::int64_t max_node_span = 0;
};

SubtreeAggregate aggregate_leaf(const Charge& node_charge, bool yes, VertexSet witness);
SubtreeAggregate aggregate_children(const Charge& node_charge,
                                    std::span<const SubtreeAggregate> children);

}  // namespace parfpt
