#include <stdexcept>

#include "doctest.h"
#include "hamspec/codec.hpp"
#include "hamspec/graph.hpp"
#include "hamspec/rng.hpp"
#include "test_helpers.hpp"

using namespace hamspec;
using namespace hamspec::testing;

TEST_CASE("graph6 encodings derived by hand") {
    // K5: n -> 'D', ten 1-bits padded to twelve -> 111111 111100 -> '~' '{'.
    CHECK(to_graph6(complete_graph(5)) == "D~{");
    CHECK(from_graph6("D~{") == complete_graph(5));
    // Edgeless graphs encode as all-zero bit groups.
    CHECK(to_graph6(empty_graph(5)) == "D??");
    CHECK(to_graph6(Graph::empty(0)) == "?");
    CHECK(to_graph6(Graph::empty(1)) == "@");
    // P4 = edges 01,12,23: column-major bits 1,0,1,0,0,1 -> 101001 -> 'h'.
    CHECK(to_graph6(path_graph(4)) == "Ch");
}

TEST_CASE("graph6 round trip over random graphs") {
    SplitMix64 rng(0x60de);
    for (int trial = 0; trial < 400; ++trial) {
        int n = 1 + static_cast<int>(rng.below(30));
        int m = static_cast<int>(rng.below(static_cast<std::uint64_t>(n * (n - 1) / 2 + 1)));
        Graph g = random_graph(rng, n, m);
        CHECK(from_graph6(to_graph6(g)) == g);
    }
    // Top of the supported range.
    Graph big = complete_graph(62);
    CHECK(from_graph6(to_graph6(big)) == big);
}

TEST_CASE("graph6 input edge cases") {
    CHECK(from_graph6(">>graph6<<D~{") == complete_graph(5));
    CHECK(from_graph6("D~{\n") == complete_graph(5));
    CHECK_THROWS_AS(from_graph6("~??"), std::invalid_argument);  // long form
    CHECK_THROWS_AS(from_graph6(""), std::invalid_argument);
    CHECK_THROWS_AS(from_graph6("D~"), std::invalid_argument);     // truncated
    CHECK_THROWS_AS(from_graph6("D~{x"), std::invalid_argument);   // trailing junk
    CHECK_THROWS_AS(from_graph6("D\x1b{"), std::invalid_argument); // byte below '?'
    CHECK_THROWS_AS(to_graph6(complete_graph(63)), std::invalid_argument);
}

TEST_CASE("edge list round trip and parsing") {
    Graph g = Graph::build(5, {{0, 1}, {1, 2}, {3, 4}});
    CHECK(from_edge_list(to_edge_list(g)) == g);

    Graph parsed = from_edge_list("# comment\n\n0 1\n1 2\n");
    CHECK(parsed == path_graph(3));

    // The n line keeps trailing isolated vertices.
    Graph iso = from_edge_list("n 4\n0 1\n");
    CHECK(iso.n == 4);
    CHECK(iso.edge_count() == 1);
    CHECK(from_edge_list(to_edge_list(iso)) == iso);

    CHECK_THROWS_AS(from_edge_list("0 1 2\n"), std::invalid_argument);
    CHECK_THROWS_AS(from_edge_list("0\n"), std::invalid_argument);
    CHECK_THROWS_AS(from_edge_list("a b\n"), std::invalid_argument);
    CHECK_THROWS_AS(from_edge_list("0 0\n"), std::invalid_argument);
    CHECK_THROWS_AS(from_edge_list("n 2\n0 5\n"), std::invalid_argument);
}

TEST_CASE("edge list parse errors carry line numbers") {
    try {
        from_edge_list("0 1\nbroken\n");
        FAIL("expected invalid_argument");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("2") != std::string::npos);
    }
}
