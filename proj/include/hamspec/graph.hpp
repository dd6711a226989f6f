#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hamspec {

// Vertex subset as a bitmask. Everything in this library is capped at 64
// vertices, which covers the whole working range (the exact oracle gives out
// far earlier anyway).
using vset = std::uint64_t;

constexpr int max_vertices = 64;

inline vset vbit(int v) { return vset{1} << v; }

// Undirected simple graph on vertices 0..n-1, adjacency kept as one bitmask
// row per vertex. Treat instances as immutable: the free functions below
// return new graphs instead of mutating.
struct Graph {
    int n = 0;
    std::vector<vset> adj;  // adj[v] = neighbours of v, bit v always clear

    static Graph empty(int n);
    static Graph build(int n, std::span<const std::pair<int, int>> edges);
    static Graph build(int n, std::initializer_list<std::pair<int, int>> edges);

    bool has_edge(int u, int v) const { return (adj[u] >> v) & 1; }
    int degree(int v) const;
    long edge_count() const;
    int min_degree() const;  // 0 for the empty graph

    vset all_vertices() const { return n == 64 ? ~vset{0} : (vset{1} << n) - 1; }

    Graph with_edge(int u, int v) const;
    Graph without_edge(int u, int v) const;

    std::vector<std::pair<int, int>> edges() const;  // sorted, u < v

    bool operator==(const Graph&) const = default;
};

// Sorted (ascending) degree sequence with the 1-based accessor d(1) <= d(2)
// <= ... <= d(n) that degree-condition statements are phrased in.
struct DegreeSequence {
    std::vector<int> sorted;

    int size() const { return static_cast<int>(sorted.size()); }
    int d(int i) const;  // 1-based, throws std::out_of_range otherwise
};

DegreeSequence degree_sequence(const Graph& g);

// Constructions. join() connects every vertex of a to every vertex of b on
// top of the two originals; labels keep a's vertices first.
Graph join(const Graph& a, const Graph& b);
Graph disjoint_union(const Graph& a, const Graph& b);
Graph complement(const Graph& g);

Graph complete_graph(int n);
Graph empty_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_bipartite(int a, int b);
Graph star_graph(int leaves);  // K_{1,leaves}, centre is vertex 0

// Shift all edges vx with x in N(v)\N[u] over to ux. Keeps the vertex count,
// the edge count and the adjacency of u and v to each other; every degree
// outside {u,v} is unchanged.
Graph kelmans(const Graph& g, int u, int v);

bool is_connected(const Graph& g);  // true for n = 0 and n = 1

// Connected component of v as a vertex mask.
vset component_of(const Graph& g, int v);

std::string format_degree_sequence(const DegreeSequence& ds);  // e.g. "3^2 11^9 13^3"

}  // namespace hamspec
