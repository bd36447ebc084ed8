#include <doctest.h>

#include "pdom/families.hpp"
#include "pdom/graph.hpp"
#include "test_support.hpp"

using namespace pdom;
using pdom::testing::TestRng;

TEST_SUITE("graph") {

TEST_CASE("add_edge rejects self-loops, duplicates and bad ids") {
    Graph g(3);
    g.add_edge(0, 1);
    CHECK_THROWS_AS(g.add_edge(1, 1), InputError);
    CHECK_THROWS_AS(g.add_edge(0, 1), InputError);
    CHECK_THROWS_AS(g.add_edge(1, 0), InputError);
    CHECK_THROWS_AS(g.add_edge(0, 3), InputError);
    CHECK(g.edge_count() == 1);
}

TEST_CASE("degree") {
    Graph c5 = gen_cycle(5);
    for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);
    Graph star = gen_star(3);
    CHECK(star.degree(0) == 3);  // center
    Graph e0 = gen_E(4, 0);
    for (int v = 0; v < e0.vertex_count(); ++v) CHECK(e0.degree(v) == 4);
    CHECK_THROWS_AS(c5.degree(5), InputError);
}

TEST_CASE("is_regular") {
    CHECK(is_regular(gen_cycle(5), 2));
    CHECK_FALSE(is_regular(gen_L(2), 4));  // the end copies hold degree-3 vertices
    CHECK(is_regular(gen_E(4, 1), 4));
    CHECK(is_regular(Graph(0), 7));  // vacuous
    CHECK(is_regular(Graph(3), 0));
}

TEST_CASE("is_claw_free") {
    CHECK_FALSE(is_claw_free(gen_star(3)));
    CHECK(is_claw_free(gen_E(4, 2)));
    CHECK(is_claw_free(gen_complete(5)));
    CHECK(is_claw_free(gen_L(2)));
    CHECK(is_claw_free(gen_path(6)));
    CHECK_FALSE(is_claw_free(gen_star(4)));

    // line graphs of max-degree-3 graphs are claw-free
    TestRng rng(11);
    for (int i = 0; i < 20; ++i) {
        Graph cubic = gen_random_cubic(6 + 2 * (i % 4), 100 + static_cast<std::uint64_t>(i));
        CHECK(is_claw_free(line_graph(cubic)));
    }
}

TEST_CASE("is_packing") {
    Graph c6 = gen_cycle(6);
    CHECK(is_packing(c6, VertexSet::of(6, {0, 3})));
    CHECK_FALSE(is_packing(c6, VertexSet::of(6, {0, 2})));
    CHECK(is_packing(c6, VertexSet::of(6, {4})));
    CHECK(is_packing(c6, VertexSet(6)));
}

TEST_CASE("distance") {
    Graph p4 = gen_path(4);
    CHECK(distance(p4, 2, 2) == 0);
    CHECK(distance(p4, 0, 3) == 3);

    Graph two_triangles(6);
    for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}})
        two_triangles.add_edge(u, v);
    CHECK_FALSE(distance(two_triangles, 0, 4).has_value());
    CHECK(distance(two_triangles, 3, 5) == 1);
}

TEST_CASE("distance is a metric on connected components") {
    TestRng rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = testing::random_graph(2 + rng.below(8), 40, rng);
        const int n = g.vertex_count();
        std::vector<std::vector<int>> d;
        for (int v = 0; v < n; ++v) d.push_back(bfs_distances(g, v));
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                CHECK(d[u][v] == d[v][u]);
                for (int w = 0; w < n; ++w)
                    if (d[u][v] >= 0 && d[v][w] >= 0) {
                        REQUIRE(d[u][w] >= 0);
                        CHECK(d[u][w] <= d[u][v] + d[v][w]);
                    }
            }
    }
}

TEST_CASE("is_connected") {
    CHECK(is_connected(gen_path(5)));
    Graph two_k4(8);
    for (int base : {0, 4})
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) two_k4.add_edge(base + i, base + j);
    CHECK_FALSE(is_connected(two_k4));
    CHECK(is_connected(gen_E(4, 0)));
    CHECK(is_connected(Graph(0)));
    CHECK_FALSE(is_connected(Graph(2)));
}

TEST_CASE("line_graph of the claw is the triangle") {
    Graph lg = line_graph(gen_star(3));
    CHECK(lg == gen_complete(3));
}

TEST_CASE("line_graph of P_4 is P_3") {
    CHECK(line_graph(gen_path(4)) == gen_path(3));
}

TEST_CASE("line_graph of K_4 is the octahedron") {
    Graph lg = line_graph(gen_complete(4));
    REQUIRE(lg.vertex_count() == 6);
    CHECK(is_regular(lg, 4));
    CHECK(is_connected(lg));
    CHECK(is_claw_free(lg));

    // brute-force adjacency check straight from the definition
    auto edges = gen_complete(4).edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            bool share = edges[i].first == edges[j].first || edges[i].first == edges[j].second ||
                         edges[i].second == edges[j].first || edges[i].second == edges[j].second;
            CHECK(lg.has_edge(static_cast<int>(i), static_cast<int>(j)) == share);
        }
}

TEST_CASE("adjacency symmetry holds on every generated graph") {
    TestRng rng(77);
    std::vector<Graph> corpus{gen_E(4, 2),          gen_E(6, 1),  gen_L(3),
                              gen_cycle(7),         gen_star(5),  gen_complete_bipartite(3, 4),
                              line_graph(gen_L(2)), testing::random_graph(9, 30, rng)};
    for (const Graph& g : corpus)
        for (int u = 0; u < g.vertex_count(); ++u)
            for (int v : g.neighbors(u)) CHECK(g.has_edge(v, u));
}

TEST_CASE("packings in 4-regular graphs cover five vertices apiece") {
    TestRng rng(21);
    std::vector<Graph> corpus{gen_E(4, 0), gen_E(4, 2), line_graph(gen_random_cubic(10, 3)),
                              line_graph(gen_random_cubic(12, 4))};
    for (const Graph& g : corpus) {
        REQUIRE(is_regular(g, 4));
        for (int trial = 0; trial < 5; ++trial) {
            VertexSet s = testing::greedy_packing(g, rng);
            REQUIRE(is_packing(g, s));
            REQUIRE(s.count() >= 1);
            CHECK(g.closed_neighborhood(s).count() == 5 * s.count());
        }
    }
}

TEST_CASE("vertex set membership compare") {
    VertexSet a = VertexSet::of(6, {0, 3});
    VertexSet b = VertexSet::of(6, {1, 2});
    CHECK(VertexSet::compare_members(a, b) < 0);
    CHECK(VertexSet::compare_members(b, a) > 0);
    CHECK(VertexSet::compare_members(a, a) == 0);
    VertexSet c = VertexSet::of(6, {1});
    CHECK(VertexSet::compare_members(c, b) < 0);  // shorter prefix wins
}

}  // TEST_SUITE
