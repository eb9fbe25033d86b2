#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "parfpt/graph.hpp"
#include "parfpt/oracle.hpp"
#include "test_util.hpp"

using namespace parfpt;

static Graph parse(const std::string& text) {
    std::istringstream in(text);
    return parse_dimacs(in);
}

TEST_CASE("dimacs: triangle") {
    Graph g = parse("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 2));
    CHECK(g.has_edge(0, 2));
}

TEST_CASE("dimacs: isolated vertices") {
    Graph g = parse("p edge 2 0\n");
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 0);
}

TEST_CASE("dimacs: parse errors name the line") {
    CHECK_THROWS_WITH_AS(parse("p edge 2 1\ne 1 1\n"), "line 2: self-loop", ParseError);
    CHECK_THROWS_WITH_AS(parse("p vertex 2 1\ne 1 2\n"),
                         "line 1: malformed header, expected 'p edge <n> <m>'", ParseError);
    CHECK_THROWS_WITH_AS(parse("p edge 2 2\ne 1 2\ne 2 1\n"), "line 3: duplicate edge", ParseError);
    CHECK_THROWS_AS(parse("p edge 2 1\ne 1 3\n"), ParseError);
    CHECK_THROWS_AS(parse("c only a header\np edge 3 2\ne 1 2\n"), ParseError);  // count mismatch
}

TEST_CASE("dimacs: comments and 1-based ids") {
    Graph g = parse("c a comment\np edge 4 2\nc another\ne 1 4\ne 2 3\n");
    CHECK(g.has_edge(0, 3));
    CHECK(g.has_edge(1, 2));
}

TEST_CASE("bare edge list, 0-based, n inferred") {
    Graph g = parse("0 1\n1 2\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK_THROWS_AS(parse("0 0\n"), ParseError);
}

TEST_CASE("delete_vertices") {
    Graph k3 = testutil::complete(3);
    SUBCASE("K3 minus one vertex is an edge") {
        auto sub = delete_vertices(k3, {0});
        CHECK(sub.graph.vertex_count() == 2);
        CHECK(sub.graph.edge_count() == 1);
        CHECK(sub.original_ids == std::vector<Vertex>{1, 2});
    }
    SUBCASE("deleting nothing is identity") {
        auto sub = delete_vertices(k3, {});
        CHECK(sub.graph.vertex_count() == 3);
        CHECK(sub.graph.edge_count() == 3);
    }
    SUBCASE("path minus middle leaves isolated endpoints") {
        auto sub = delete_vertices(testutil::path(3), {1});
        CHECK(sub.graph.vertex_count() == 2);
        CHECK(sub.graph.edge_count() == 0);
    }
    SUBCASE("invalid id") { CHECK_THROWS_AS(delete_vertices(k3, {3}), std::invalid_argument); }
}

TEST_CASE("delete_vertices preserves adjacency through the id map") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Graph g = testutil::gnp(10, 0.4, seed);
        VertexSet removed{1, 4, 7};
        auto sub = delete_vertices(g, removed);
        sub.graph.for_each_edge([&](Vertex u, Vertex v) {
            CHECK(g.has_edge(sub.original_ids[u], sub.original_ids[v]));
        });
        std::int64_t kept_edges = 0;
        g.for_each_edge([&](Vertex u, Vertex v) {
            if (!set_contains(removed, u) && !set_contains(removed, v)) ++kept_edges;
        });
        CHECK(kept_edges == sub.graph.edge_count());
    }
}

TEST_CASE("maximal matching") {
    SUBCASE("empty graph") { CHECK(maximal_matching(Graph::from_edges(3, {})).empty()); }
    SUBCASE("triangle gives the lexicographically first edge") {
        EdgeSet m = maximal_matching(testutil::complete(3));
        REQUIRE(m.size() == 1);
        CHECK(m[0] == Edge{0, 1});
    }
    SUBCASE("a perfect matching is its own maximal matching") {
        Graph g = testutil::disjoint_edges(4);
        CHECK(maximal_matching(g).size() == 4);
    }
    SUBCASE("maximality: every edge has a matched endpoint") {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            Graph g = testutil::gnp(12, 0.3, seed);
            EdgeSet m = maximal_matching(g);
            std::vector<char> matched(g.vertex_count(), 0);
            for (const Edge& e : m) {
                CHECK(!matched[e.u]);  // pairwise disjoint endpoints
                CHECK(!matched[e.v]);
                matched[e.u] = matched[e.v] = 1;
            }
            g.for_each_edge([&](Vertex u, Vertex v) { CHECK((matched[u] || matched[v])); });
        }
    }
}

TEST_CASE("maximal set packing") {
    SUBCASE("greedy keeps the first structure and stays disjoint") {
        // Brute force over all subsets confirms {{0,1},{3,4}} is the maximal
        // disjoint family containing {0,1} for this input.
        std::vector<VertexSet> structures{{0, 1}, {1, 2}, {3, 4}};
        auto packing = maximal_set_packing(structures, 10);
        REQUIRE(packing.size() == 2);
        CHECK(packing[0] == VertexSet{0, 1});
        CHECK(packing[1] == VertexSet{3, 4});
    }
    SUBCASE("cap binds") {
        auto packing = maximal_set_packing({{0}, {1}, {2}}, 2);
        REQUIRE(packing.size() == 2);
        CHECK(packing[0] == VertexSet{0});
        CHECK(packing[1] == VertexSet{1});
    }
    SUBCASE("single structure") {
        auto packing = maximal_set_packing({{5, 7}}, 1);
        REQUIRE(packing.size() == 1);
        CHECK(packing[0] == VertexSet{5, 7});
    }
    SUBCASE("maximality up to the cap") {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            Graph g = testutil::gnp(12, 0.35, seed);
            std::vector<VertexSet> structures;
            g.for_each_edge([&](Vertex u, Vertex v) { structures.push_back({u, v}); });
            if (structures.empty()) continue;
            auto packing = maximal_set_packing(structures, 3);
            for (std::size_t i = 0; i < packing.size(); ++i)
                for (std::size_t j = i + 1; j < packing.size(); ++j)
                    CHECK(sets_disjoint(packing[i], packing[j]));
            if (packing.size() < 3) {
                for (const auto& s : structures) {
                    bool disjoint_from_all = true;
                    for (const auto& p : packing)
                        if (!sets_disjoint(s, p)) disjoint_from_all = false;
                    CHECK(!disjoint_from_all);
                }
            }
        }
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(maximal_set_packing({}, 1), std::invalid_argument);
        CHECK_THROWS_AS(maximal_set_packing({{0}}, 0), std::invalid_argument);
    }
}

TEST_CASE("maximum bipartite matching") {
    SUBCASE("K22") {
        auto bm = maximum_bipartite_matching(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
        CHECK(bm.matching.size() == 2);
    }
    SUBCASE("star") {
        auto bm = maximum_bipartite_matching(1, 3, {{0, 0}, {0, 1}, {0, 2}});
        CHECK(bm.matching.size() == 1);
    }
    SUBCASE("six-cycle") {
        // Brute force over all matchings of C6 (as a_i - b_i, a_i - b_{i+1})
        // gives maximum 3.
        auto bm = maximum_bipartite_matching(3, 3, {{0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 2}, {2, 0}});
        CHECK(bm.matching.size() == 3);
    }
    SUBCASE("strong duality: cover size equals matching size") {
        for (std::uint64_t seed = 0; seed < 25; ++seed) {
            Graph g = testutil::gnp(11, 0.3, seed);
            std::vector<std::pair<int, int>> edges;
            g.for_each_edge([&](Vertex u, Vertex v) {
                edges.emplace_back(u, v);
                edges.emplace_back(v, u);
            });
            auto bm = maximum_bipartite_matching(g.vertex_count(), g.vertex_count(), edges);
            CHECK(bm.left_cover.size() + bm.right_cover.size() == bm.matching.size());
            // And it is a cover: no edge with both endpoints outside.
            for (const auto& [u, v] : edges) {
                bool covered = set_contains(bm.left_cover, u) || set_contains(bm.right_cover, v);
                CHECK(covered);
            }
        }
    }
}

TEST_CASE("instance generation") {
    SUBCASE("gnp on zero vertices") {
        Instance inst = generate_instance(InstanceKind::gnp, 0, 0.5, 7);
        CHECK(inst.graph.vertex_count() == 0);
        CHECK(inst.graph.edge_count() == 0);
    }
    SUBCASE("gnp extremes") {
        CHECK(generate_instance(InstanceKind::gnp, 6, 1.0, 0).graph.edge_count() == 15);
        CHECK(generate_instance(InstanceKind::gnp, 6, 0.0, 0).graph.edge_count() == 0);
    }
    SUBCASE("planted instance has a cover of the planted size") {
        Instance inst = generate_instance(InstanceKind::planted_vc, 10, 3, 1);
        CHECK(inst.k == 3);
        CHECK(brute_force_vc(inst.graph, 3).member);
    }
    SUBCASE("same seed, same graph") {
        for (auto kind : {InstanceKind::gnp, InstanceKind::planted_vc}) {
            double param = kind == InstanceKind::gnp ? 0.4 : 4;
            Instance a = generate_instance(kind, 14, param, 99);
            Instance b = generate_instance(kind, 14, param, 99);
            CHECK(a.graph.edge_list() == b.graph.edge_list());
        }
    }
    SUBCASE("planted core does not depend on n") {
        Instance small = generate_instance(InstanceKind::planted_vc, 250, 6, 5);
        Instance large = generate_instance(InstanceKind::planted_vc, 1000, 6, 5);
        CHECK(small.graph.edge_list() == large.graph.edge_list());
    }
    SUBCASE("parameter validation") {
        CHECK_THROWS_AS(generate_instance(InstanceKind::gnp, 5, 1.5, 0), std::invalid_argument);
        CHECK_THROWS_AS(generate_instance(InstanceKind::planted_vc, 5, 6, 0), std::invalid_argument);
        CHECK_THROWS_AS(generate_instance(InstanceKind::gnp, -1, 0.5, 0), std::invalid_argument);
    }
}

TEST_CASE("graph construction rejects bad edges") {
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 2}}), std::invalid_argument);
}
