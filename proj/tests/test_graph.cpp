#include <stdexcept>

#include "doctest.h"
#include "hamspec/graph.hpp"
#include "hamspec/rng.hpp"
#include "test_helpers.hpp"

using namespace hamspec;
using namespace hamspec::testing;

TEST_CASE("build, edges, degrees") {
    Graph g = Graph::build(4, {{0, 1}, {1, 2}, {2, 3}, {0, 1}});  // duplicate collapses
    CHECK(g.n == 4);
    CHECK(g.edge_count() == 3);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 0));
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK(g.degree(1) == 2);
    CHECK(g.degree(3) == 1);
    CHECK(g.min_degree() == 1);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
    CHECK(Graph::empty(5).edge_count() == 0);
    CHECK(Graph::empty(0).min_degree() == 0);
}

TEST_CASE("with_edge and without_edge copy instead of mutating") {
    Graph g = path_graph(3);
    Graph h = g.with_edge(0, 2);
    CHECK(g.edge_count() == 2);
    CHECK(h.edge_count() == 3);
    Graph back = h.without_edge(0, 2);
    CHECK(back == g);
}

TEST_CASE("standard constructions") {
    CHECK(complete_graph(6).edge_count() == 15);
    CHECK(complete_graph(6).min_degree() == 5);
    CHECK(path_graph(5).edge_count() == 4);
    CHECK(cycle_graph(5).edge_count() == 5);
    CHECK(cycle_graph(5).min_degree() == 2);
    CHECK(complete_bipartite(3, 4).edge_count() == 12);
    CHECK(star_graph(6).n == 7);
    CHECK(star_graph(6).degree(0) == 6);
    CHECK(empty_graph(4).edge_count() == 0);
}

TEST_CASE("join places the first operand's labels first") {
    Graph j = join(complete_graph(2), empty_graph(3));
    CHECK(j.n == 5);
    CHECK(j.edge_count() == 1 + 2 * 3);
    CHECK(j.has_edge(0, 1));
    CHECK_FALSE(j.has_edge(2, 3));
    CHECK(j.has_edge(0, 4));
    CHECK(j.has_edge(1, 2));

    // K_a joined with K_b is K_{a+b}.
    CHECK(join(complete_graph(3), complete_graph(4)) == complete_graph(7));
}

TEST_CASE("disjoint_union and complement") {
    Graph du = disjoint_union(complete_graph(3), path_graph(2));
    CHECK(du.n == 5);
    CHECK(du.edge_count() == 4);
    CHECK_FALSE(du.has_edge(2, 3));
    CHECK(du.has_edge(3, 4));

    Graph g = path_graph(4);
    Graph c = complement(g);
    CHECK(c.edge_count() == 6 - 3);
    CHECK(complement(c) == g);
    CHECK(complement(complete_graph(5)) == empty_graph(5));
}

TEST_CASE("degree_sequence sorts ascending and d() is 1-based") {
    DegreeSequence ds = degree_sequence(star_graph(3));
    CHECK(ds.sorted == std::vector<int>{1, 1, 1, 3});
    CHECK(ds.d(1) == 1);
    CHECK(ds.d(4) == 3);
    CHECK_THROWS_AS(ds.d(0), std::out_of_range);
    CHECK_THROWS_AS(ds.d(5), std::out_of_range);
}

TEST_CASE("format_degree_sequence groups repeats") {
    CHECK(format_degree_sequence(degree_sequence(star_graph(3))) == "1^3 3");
    CHECK(format_degree_sequence(degree_sequence(complete_graph(4))) == "3^4");
    CHECK(format_degree_sequence(degree_sequence(path_graph(3))) == "1^2 2");
}

TEST_CASE("kelmans keeps order, size, and outside degrees") {
    SplitMix64 rng(0xce11);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 5 + static_cast<int>(rng.below(5));
        Graph g = random_graph(rng, n, n + static_cast<int>(rng.below(n)));
        int u = static_cast<int>(rng.below(n));
        int v = (u + 1 + static_cast<int>(rng.below(n - 1))) % n;
        Graph k = kelmans(g, u, v);
        CHECK(k.n == g.n);
        CHECK(k.edge_count() == g.edge_count());
        CHECK(k.has_edge(u, v) == g.has_edge(u, v));
        for (int w = 0; w < n; ++w)
            if (w != u && w != v) CHECK(k.degree(w) == g.degree(w));
        CHECK(k.degree(u) + k.degree(v) == g.degree(u) + g.degree(v));
    }

    // On P4, shifting vertex 2's private neighbour 3 onto vertex 1 yields the
    // star centred at 1.
    Graph k = kelmans(path_graph(4), 1, 2);
    CHECK(k.degree(1) == 3);
    CHECK(k.degree(2) == 1);
    CHECK(k.has_edge(1, 3));
    CHECK_FALSE(k.has_edge(2, 3));
    // No private neighbours, nothing moves.
    CHECK(kelmans(path_graph(3), 0, 2) == path_graph(3));
}

TEST_CASE("connectivity and components") {
    CHECK(is_connected(path_graph(6)));
    CHECK(is_connected(Graph::empty(1)));
    CHECK(is_connected(Graph::empty(0)));
    CHECK_FALSE(is_connected(Graph::empty(2)));
    Graph du = disjoint_union(complete_graph(3), complete_graph(2));
    CHECK_FALSE(is_connected(du));
    CHECK(component_of(du, 0) == vset{0b00111});
    CHECK(component_of(du, 4) == vset{0b11000});
    CHECK(component_of(path_graph(4), 2) == path_graph(4).all_vertices());
}
