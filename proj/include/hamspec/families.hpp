#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hamspec/graph.hpp"

namespace hamspec {

// Extremal families blocking the edge-count and spectral conditions.
//
//   s_graph(n,k) = K_k  joined to (K_{n-2k+1} + (k-1) isolated vertices)
//   t_graph(n,k) = K_2  joined to (K_{n-k-1} + K_{k-1})
//
// Canonical labelling: join block first, big clique next, the independent
// set / small clique last. Both are connected, have minimum degree >= 3 for
// k >= 3 resp. n large enough, and are never Hamilton-connected (the last
// block is chokepointed through the join block).
Graph s_graph(int n, int k);
Graph t_graph(int n, int k);

long s_graph_edges(int n, int k);  // closed form, cross-checked in tests
long t_graph_edges(int n, int k);

// The six one-edge-deleted shapes that exhaust S_n^3 / T_n^3 minus an edge
// up to isomorphism. H1/H2/H3 delete a join-join, join-clique, clique-clique
// edge of s_graph(n,3); T1/T2/T3 the same for t_graph(n,3).
enum class NamedVariant { H1, H2, H3, T1, T2, T3 };
Graph named_variant(NamedVariant which, int n);
std::string variant_name(NamedVariant which);
std::optional<NamedVariant> variant_by_name(const std::string& name);

// Every graph reachable from the base family graph by deleting exactly t
// distinct edges, keeping minimum degree >= 3. Deterministic lexicographic
// order over edge subsets; with dedup=true only the first representative of
// each isomorphism class is yielded. Return false from the callback to stop.
struct DeletedFamily {
    char family;  // 'S' or 'T'
    int n;
    int k;
    int t;
};
void enumerate_deleted(const DeletedFamily& spec, bool dedup,
                       const std::function<bool(const Graph&)>& yield);
std::vector<Graph> enumerate_deleted_all(const DeletedFamily& spec, bool dedup);

// Structural membership certificates, valid on graphs with delta >= 3:
//   S3: some nonadjacent pair u,v shares an identical 3-vertex neighbourhood
//       <=> G is a spanning subgraph of a relabelled s_graph(n,3).
//   T3: some adjacent degree-3 pair u,v has N[u] == N[v]
//       <=> G is a spanning subgraph of a relabelled t_graph(n,3).
bool membership_certificate_S3(const Graph& g);
bool membership_certificate_T3(const Graph& g);

// General-k version of the S certificate: an independent (k-1)-set whose
// joint neighbourhood has at most k vertices. Used at the sporadic orders
// (n,k) in {(11,5),(12,6),(13,6),(14,7),(16,8)}.
bool spanning_subgraph_of_s(const Graph& g, int k);
bool spanning_subgraph_of_t3(const Graph& g);

// Fixed exception list of the delta >= 3 edge condition at threshold
// C(n-2,2)+6: eleven graphs, the first parametric in n (= s_graph(n,3)),
// the rest at their own fixed orders. Only members of order n are returned.
struct NamedGraph {
    std::string name;
    Graph g;
};
std::vector<NamedGraph> np1_graphs(int n);

// Sporadic exceptions appearing at individual orders:
//   S11_5      = s_graph(11,5)
//   S13_6      = s_graph(13,6)
//   K7_K2_K16  = K_7 joined to (K_2 + K_{1,6}), order 16
//   Kn1_ee     = K_{n-1} plus one extra vertex adjacent to two clique
//                vertices (needs n; the only family member with delta < 3)
enum class Sporadic { S11_5, S13_6, K7_K2_K16, Kn1_ee };
Graph sporadic_exception(Sporadic which, std::optional<int> n = std::nullopt);
std::string sporadic_name(Sporadic which);

// Structural recognisers that avoid the general isomorphism test (and its
// order cap): exact match, not subgraph containment.
bool is_s3_graph(const Graph& g);
bool is_t3_graph(const Graph& g);
bool is_kn1_ee(const Graph& g);

}  // namespace hamspec
