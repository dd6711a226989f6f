#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "hamspec/graph.hpp"
#include "hamspec/rng.hpp"

namespace hamspec::testing {

// Reference Hamilton-connectivity decision by trying every vertex
// permutation. Exponentially slower than the subset DP but shares no code
// with it, which is the point; usable to n ~ 8.
inline bool naive_path_between(const Graph& g, int s, int t) {
    std::vector<int> mid;
    for (int v = 0; v < g.n; ++v)
        if (v != s && v != t) mid.push_back(v);
    std::sort(mid.begin(), mid.end());
    do {
        int prev = s;
        bool ok = true;
        for (int v : mid) {
            if (!g.has_edge(prev, v)) {
                ok = false;
                break;
            }
            prev = v;
        }
        if (ok && g.has_edge(prev, t)) return true;
    } while (std::next_permutation(mid.begin(), mid.end()));
    return false;
}

inline std::optional<std::pair<int, int>> naive_first_failing_pair(const Graph& g) {
    for (int s = 0; s < g.n; ++s)
        for (int t = s + 1; t < g.n; ++t)
            if (!naive_path_between(g, s, t)) return std::make_pair(s, t);
    return std::nullopt;
}

inline bool naive_hamilton_connected(const Graph& g) {
    return g.n >= 3 && !naive_first_failing_pair(g).has_value();
}

// Validates a claimed spanning path: right endpoints, every vertex once,
// consecutive vertices adjacent.
inline bool valid_spanning_path(const Graph& g, const std::vector<int>& path, int s, int t) {
    if (static_cast<int>(path.size()) != g.n) return false;
    std::vector<int> seen(g.n, 0);
    for (int v : path) {
        if (v < 0 || v >= g.n || seen[v]) return false;
        seen[v] = 1;
    }
    if (!((path.front() == s && path.back() == t) || (path.front() == t && path.back() == s)))
        return false;
    for (size_t i = 0; i + 1 < path.size(); ++i)
        if (!g.has_edge(path[i], path[i + 1])) return false;
    return true;
}

// Uniform random graph with m edges, for property trials.
inline Graph random_graph(SplitMix64& rng, int n, int m) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    for (size_t i = 0; i < slots.size(); ++i)
        std::swap(slots[i], slots[i + rng.below(slots.size() - i)]);
    slots.resize(static_cast<size_t>(m));
    return Graph::build(n, slots);
}

inline Graph relabel_by(const Graph& g, const std::vector<int>& order) {
    // order[i] = old vertex placed at slot i, matching hamspec::relabel
    std::vector<int> slot_of(g.n);
    for (int i = 0; i < g.n; ++i) slot_of[order[i]] = i;
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(slot_of[u], slot_of[v]);
    return Graph::build(g.n, edges);
}

// Random permutation relabeling, for isomorphism trials.
inline Graph shuffled(SplitMix64& rng, const Graph& g) {
    std::vector<int> order(g.n);
    std::iota(order.begin(), order.end(), 0);
    for (int i = 0; i < g.n; ++i)
        std::swap(order[i], order[i + static_cast<int>(rng.below(g.n - i))]);
    return relabel_by(g, order);
}

// The Petersen graph: outer 5-cycle, inner 5-cycle with step 2, spokes.
inline Graph petersen() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
        edges.emplace_back(i, 5 + i);
    }
    return Graph::build(10, edges);
}

}  // namespace hamspec::testing
