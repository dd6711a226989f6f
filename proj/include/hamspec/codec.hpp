#pragma once

#include <string>
#include <string_view>

#include "hamspec/graph.hpp"

namespace hamspec {

// graph6 text codec, short form only (n <= 62). The optional ">>graph6<<"
// header is accepted and stripped on input, never emitted. Long-form inputs
// (leading '~') are rejected with a clear message.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view line);

// Plain edge-list text: one "u v" pair per line, 0-indexed; '#' starts a
// comment; blank lines ignored. An optional "n <count>" line fixes the
// vertex count (needed to keep isolated vertices); otherwise the count is
// 1 + the largest endpoint.
std::string to_edge_list(const Graph& g);
Graph from_edge_list(std::string_view text);

}  // namespace hamspec
