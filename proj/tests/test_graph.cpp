#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "avgconn/enumerate.hpp"
#include "avgconn/families.hpp"
#include "avgconn/graph.hpp"
#include "support/oracles.hpp"

using namespace avgconn;

TEST_CASE("build_graph basics") {
    const Graph p3 = build_graph(3, {{0, 1}, {1, 2}});
    CHECK(p3.vertex_count() == 3);
    CHECK(p3.edge_count() == 2);
    CHECK(p3.has_edge(0, 1));
    CHECK(!p3.has_edge(0, 2));

    // duplicate edges collapse
    const Graph dup = build_graph(4, {{0, 1}, {0, 1}, {1, 0}});
    CHECK(dup.edge_count() == 1);

    CHECK_THROWS_AS(build_graph(2, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(build_graph(3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(build_graph(0, {}), std::invalid_argument);
}

TEST_CASE("generators") {
    CHECK(complete(4).edge_count() == 6);
    CHECK(complete(1).edge_count() == 0);
    CHECK(empty_graph(3).edge_count() == 0);
    CHECK(path(5).edge_count() == 4);
    CHECK(star(5).degree(0) == 4);
    CHECK(cycle(5).edge_count() == 5);
    CHECK_THROWS_AS(cycle(2), std::invalid_argument);

    const auto kab = complete_bipartite(2, 3);
    CHECK(kab.graph.edge_count() == 6);
    CHECK(kab.split.side_x == std::vector<int>{0, 1});
    CHECK(kab.split.side_y == std::vector<int>{2, 3, 4});
    CHECK(is_valid_split(kab.graph, kab.split));
}

TEST_CASE("join and disjoint_union") {
    const Graph k1 = complete(1);
    const Graph s = join(k1, empty_graph(3));
    CHECK(s == star(4));

    // m(join) = n1*n2 + m1 + m2
    const Graph a = cycle(4), b = path(3);
    CHECK(join(a, b).edge_count() == 4 * 3 + a.edge_count() + b.edge_count());

    // join of empty graphs is complete bipartite, identically labeled
    CHECK(join(empty_graph(2), empty_graph(3)) == complete_bipartite(2, 3).graph);

    const Graph u = disjoint_union(complete(2), complete(2));
    CHECK(u.vertex_count() == 4);
    CHECK(u.edge_count() == 2);
    CHECK(disjoint_union(complete(3), empty_graph(3)).edge_count() == 3);
}

TEST_CASE("split family") {
    // K_1 v (K_3 u 3*K_1) on 7 vertices
    const Graph g = split_family(7, 1, {3, 1, 1, 1});
    CHECK(g.vertex_count() == 7);
    CHECK(g == g1_family(7, 3));
    CHECK_THROWS_AS(split_family(7, 1, {3, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(split_family(7, 1, {3, 0, 1, 1, 1}), std::invalid_argument);

    CHECK(g2_family(8, 2) == split_family(8, 3, {1, 1, 1, 1, 1}));

    const auto part = split_family_partition(1, {3, 1, 1, 1});
    CHECK(is_valid_partition(7, part));
    CHECK(part.blocks.size() == 5);
}

TEST_CASE("g1/g2 parameter checks") {
    CHECK_THROWS_AS(g1_family(5, 1), std::invalid_argument);
    CHECK_THROWS_AS(g1_family(3, 2), std::invalid_argument);
    CHECK_THROWS_AS(g2_family(7, 2), std::invalid_argument);  // parity
    CHECK(g1_family(7, 3).vertex_count() == 7);
    CHECK(g2_family(8, 2).vertex_count() == 8);
}

TEST_CASE("gstar family") {
    const auto gs = gstar_family(2, 1, 3, 4);
    CHECK(gs.graph.vertex_count() == 7);
    CHECK(is_valid_split(gs.graph, gs.split));

    // every vertex of X-S has degree y, every vertex of S has degree n_s
    for (int v = 0; v < 2; ++v) CHECK(gs.graph.degree(v) == 1);
    CHECK(gs.graph.degree(2) == 4);

    // N(S) computed from the graph equals the declared N(S) block
    std::vector<int> nbhd;
    for (int v = 0; v < 2; ++v)
        for (int w : gs.graph.neighbors(v)) nbhd.push_back(w);
    std::sort(nbhd.begin(), nbhd.end());
    nbhd.erase(std::unique(nbhd.begin(), nbhd.end()), nbhd.end());
    CHECK(nbhd == gs.blocks.blocks[1]);

    CHECK(is_valid_partition(7, gs.blocks));
    CHECK_THROWS_AS(gstar_family(3, 1, 2, 4), std::invalid_argument);
}

TEST_CASE("is_connected / bipartition") {
    CHECK(is_connected(cycle(5)));
    CHECK(!bipartition(cycle(5)).has_value());

    const auto kab = bipartition(complete_bipartite(2, 3).graph);
    REQUIRE(kab.has_value());
    CHECK(kab->side_x.size() == 2);
    CHECK(kab->side_y.size() == 3);

    const Graph two_edges = build_graph(4, {{0, 1}, {2, 3}});
    CHECK(!is_connected(two_edges));
    // deterministic side assignment: smallest id of each component in side_x
    const auto split = bipartition(two_edges);
    REQUIRE(split.has_value());
    CHECK(split->side_x == std::vector<int>{0, 2});
}

TEST_CASE("enumeration counts match the component recurrence") {
    const std::uint64_t expected[] = {0, 0, 1, 4, 38, 728, 26704};
    for (int n = 2; n <= 6; ++n) {
        CHECK(connected_graph_count(n) == expected[n]);
        CHECK(test::connected_count_recurrence(n) == expected[n]);
    }
    CHECK_THROWS_AS(connected_graph_count(1), std::invalid_argument);
    CHECK_THROWS_AS(connected_graph_count(9), std::invalid_argument);
}

TEST_CASE("enumerator streams each connected graph once") {
    ConnectedGraphEnumerator en(3);
    int count = 0;
    int triangles = 0;
    while (const auto g = en.next()) {
        ++count;
        if (g->edge_count() == 3) ++triangles;
        CHECK(is_connected(*g));
    }
    CHECK(count == 4);  // 3 labeled paths + 1 triangle
    CHECK(triangles == 1);
}

TEST_CASE("edge mask helpers agree with Graph routines") {
    for (std::uint64_t mask = 0; mask < edge_subset_count(4); ++mask) {
        const Graph g = graph_from_edge_mask(4, mask);
        CHECK(edge_mask_connected(4, mask) == is_connected(g));
        CHECK(edge_mask_bipartite(4, mask) == bipartition(g).has_value());
    }
}
