#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "parfpt/cost.hpp"
#include "parfpt/graph.hpp"

namespace parfpt {

// Per-child budget decreases d = (d_1, ..., d_m), all entries >= 1.
struct BranchingVector {
    std::vector<int> d;
};

// An admissible set D of branching vectors. Beyond an explicit list, a
// family may declare that an unlisted tail exists whose branching numbers
// are dominated by the listed members (e.g. {(1,3),(1,4),...} where
// xi is maximal at (1,3)); without that declaration an infinite family
// cannot be evaluated.
struct BranchingFamily {
    std::vector<BranchingVector> vectors;
    enum class Tail { finite, dominated_by_listed, undeclared_infinite } tail = Tail::finite;
};

// xi_d: reciprocal of the unique root in (0,1] of 1 - sum_i x^{d_i},
// found by bracketing bisection to absolute root tolerance 1e-12.
double branching_number(const BranchingVector& d);

// xi_D = sup over members; requires finite D or a dominated tail.
double family_branching_number(const BranchingFamily& D);

// ceil(k / max_{d in D} min_i d_i): depth bound of any D-branching tree.
int predicted_depth_bound(const BranchingFamily& D, int k);

// decide's output: a verdict plus, on yes, a completion set that together
// with the partial solution covers the residual graph.
struct Decision {
    std::optional<Answer> verdict;
    VertexSet completion;
};

// Implementation triple of a local branching rule, plus its cost model.
// All procedures are pure functions of (G, k, P); the residual graph G - P
// is what they inspect. pick_first(G,k,P) equals choices(G,k,P).front()
// and exists so callers that need only the canonical structure can skip
// materializing all of N.
struct RuleImplementation {
    std::string name;
    BranchingFamily family;

    // s: maximum size of any branch set the rule can emit, resolved against
    // the root graph (the degree rule's s is its root maximum degree).
    std::function<int(const Graph&)> structure_bound;

    std::function<Decision(const Graph&, int, const VertexSet&)> decide;
    std::function<std::vector<VertexSet>(const Graph&, int, const VertexSet&)> choices;
    std::function<VertexSet(const Graph&, int, const VertexSet&)> pick_first;
    std::function<std::vector<VertexSet>(const Graph&, int, const VertexSet&, const VertexSet&)> branches;

    // Model work of one invocation, in touches of the residual graph.
    std::function<std::int64_t(const Graph&)> decide_touches;
    std::function<std::int64_t(const Graph&)> choices_touches;
    int decide_span_exp = 1;
    int choices_span_exp = 1;
};

// Branch-on-an-arbitrary-edge: branches({u,v}) = {{u},{v}}, s = 1, D = {(1,1)}.
RuleImplementation vc_edge_rule();

// Branch on a degree->=3 vertex v: {{v}, N(v)}; instances of maximum degree
// <= 2 are solved directly. D = {(1,3),(1,4),...} with xi attained at (1,3).
RuleImplementation vc_degree_rule();

// Matching-based rule: decide accepts when a maximal matching M of the
// residual graph has 2|M| <= budget (endpoints cover everything) and
// rejects when |M| > budget; choices are M's edges.
RuleImplementation vc_matching_rule();

// Exact vertex cover decision for graphs of maximum degree <= 2
// (disjoint paths and cycles): optimum is sum of ceil(edges/2) per path
// and ceil(length/2) per cycle.
bool solve_degree_two(const Graph& g, int budget);

// An optimal cover of a maximum-degree-<=2 graph, for witness assembly.
VertexSet degree_two_optimal_cover(const Graph& g);

struct Branch {
    VertexSet added;      // vertices joining the partial solution
    int budget_spent = 0; // == |added|
};

// Outcome of one B1/B* invocation at a node, with its model charge.
struct BranchStep {
    std::optional<Answer> verdict;
    VertexSet completion;          // valid when verdict == yes
    std::vector<Branch> branches;  // nonempty when no verdict
    Charge charge;
    int packed_count = 0;          // structures branched over simultaneously
};

// B1: branch over the canonical first structure of choices(G,k,P).
BranchStep b_one(const RuleImplementation& rule, const Graph& g, int k, const VertexSet& partial);

// B*: pack up to cap = max(1, floor((k-|P|)/(s+1))) pairwise-disjoint
// structures and branch over the Cartesian product of their branch
// families. Branch combinations that would overspend the remaining budget
// cannot contain a solution and are dropped; if none remain the outcome is
// the verdict no.
BranchStep b_star(const RuleImplementation& rule, const Graph& g, int k, const VertexSet& partial,
                  int structure_bound);

// Convenience overload resolving s against g as the root graph.
BranchStep b_star(const RuleImplementation& rule, const Graph& g, int k, const VertexSet& partial);

}  // namespace parfpt
