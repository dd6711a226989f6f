#pragma once

#include <string>
#include <vector>

#include "hamspec/graph.hpp"

namespace hamspec {

// Stable colouring by iterated neighbour-colour refinement (degree first,
// then multisets of neighbour colours until a fixed point). Colour ids are
// label-independent: they index the sorted list of refinement signatures.
std::vector<int> refinement_colors(const Graph& g);

// Exact isomorphism test: refinement compatibility first, then backtracking
// over colour-respecting bijections. Exposed for orders up to 20; the
// exception families it is used on have few colour classes, which keeps the
// search shallow.
bool are_isomorphic(const Graph& a, const Graph& b);

// Relabel by (refinement colour, greedy adjacency tie-break) and encode as
// graph6. Equal fingerprints imply isomorphic graphs (the string encodes the
// full relabelled graph); isomorphic graphs usually, but not always, share a
// fingerprint. Good enough as a stable report identifier.
std::string fingerprint(const Graph& g);

Graph relabel(const Graph& g, const std::vector<int>& order);  // order[i] = old vertex at slot i

}  // namespace hamspec
