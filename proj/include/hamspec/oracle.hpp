#pragma once

#include <chrono>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hamspec/graph.hpp"

namespace hamspec {

// Hard size cap for the subset DP (2^n table); callers should route larger
// graphs elsewhere or report them unverifiable.
inline constexpr int oracle_max_vertices = 24;

// Cooperative wall-clock cutoff for the subset DP. Checked coarsely (every
// few thousand masks), so overshoot is bounded and cheap.
using Deadline = std::optional<std::chrono::steady_clock::time_point>;

// Raised when a deadline expires inside the oracle; the harness turns this
// into an anomaly entry instead of crashing a campaign.
struct oracle_timeout : std::runtime_error {
    explicit oracle_timeout(const std::string& what) : std::runtime_error(what) {}
};

struct HamiltonVerdict {
    bool hamilton_connected = false;
    // Lexicographically first ordered-by-(min,max) pair with no spanning
    // path; present exactly when hamilton_connected is false.
    std::optional<std::pair<int, int>> failing_pair;
    // Populated only when witnesses were requested and the verdict is
    // positive: one spanning path per unordered pair.
    std::map<std::pair<int, int>, std::vector<int>> witnesses;
};

// Spanning (Hamilton) path between two fixed endpoints; returns the path as
// a vertex list s..t, or nullopt. Exact subset DP, O(2^n * n^2) worst case,
// practical to n ~ 24.
std::optional<std::vector<int>> hamilton_path_between(const Graph& g, int s, int t,
                                                      Deadline deadline = {});

// Exact decision: every ordered pair of distinct vertices is joined by a
// spanning path. Pairs are scanned in lexicographic order and the scan stops
// at the first failure. Requires n >= 3.
HamiltonVerdict is_hamilton_connected(const Graph& g, bool keep_witnesses = false,
                                      Deadline deadline = {});

bool is_hamiltonian(const Graph& g, Deadline deadline = {});  // n >= 3
bool is_traceable(const Graph& g, Deadline deadline = {});    // n >= 1

}  // namespace hamspec
