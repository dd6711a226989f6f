#include "hamspec/oracle.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace hamspec {

namespace {


void check_oracle_input(const Graph& g, int min_n) {
    if (g.n < min_n)
        throw std::invalid_argument("oracle needs at least " + std::to_string(min_n) +
                                    " vertices, got " + std::to_string(g.n));
    if (g.n > oracle_max_vertices)
        throw std::invalid_argument("oracle capped at " + std::to_string(oracle_max_vertices) +
                                    " vertices, got " + std::to_string(g.n));
}

// reach[mask] = set of endpoints v such that some simple path from s covers
// exactly `mask` and ends at v. Filled by forward propagation over masks in
// increasing order; masks not containing s stay empty and cost one load.
struct PathTable {
    std::vector<std::uint32_t> reach;
    int n;

    void fill_from(const Graph& g, int s, Deadline deadline) {
        n = g.n;
        const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
        reach.assign(size_t{1} << n, 0);
        reach[1u << s] = 1u << s;
        std::uint32_t mask = 1u << s;
        for (;; ++mask) {
            if (mask > full) break;
            std::uint32_t ends = reach[mask];
            if (!ends) continue;
            if (deadline && (mask & 0xfff) == 0 &&
                std::chrono::steady_clock::now() > *deadline)
                throw oracle_timeout("hamilton path search timed out (n=" + std::to_string(n) +
                                     ")");
            std::uint32_t grow = 0;
            std::uint32_t e = ends;
            while (e) {
                int u = std::countr_zero(e);
                e &= e - 1;
                grow |= static_cast<std::uint32_t>(g.adj[static_cast<size_t>(u)]);
            }
            grow &= full & ~mask;
            while (grow) {
                int v = std::countr_zero(grow);
                grow &= grow - 1;
                if (ends & static_cast<std::uint32_t>(g.adj[static_cast<size_t>(v)]))
                    reach[mask | (1u << v)] |= 1u << v;
            }
        }
    }

    // Reconstruct one spanning path s..t; assumes t is reachable on the full mask.
    std::vector<int> backtrack(const Graph& g, int s, int t) const {
        const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
        std::vector<int> rev;
        std::uint32_t mask = full;
        int cur = t;
        while (true) {
            rev.push_back(cur);
            if (mask == (1u << s)) break;
            std::uint32_t prev_mask = mask & ~(1u << cur);
            std::uint32_t cand = reach[prev_mask] &
                                 static_cast<std::uint32_t>(g.adj[static_cast<size_t>(cur)]);
            cur = std::countr_zero(cand);  // deterministic: lowest candidate
            mask = prev_mask;
        }
        return {rev.rbegin(), rev.rend()};
    }
};

}  // namespace

std::optional<std::vector<int>> hamilton_path_between(const Graph& g, int s, int t,
                                                      Deadline deadline) {
    check_oracle_input(g, 2);
    if (s < 0 || s >= g.n || t < 0 || t >= g.n || s == t)
        throw std::invalid_argument("hamilton_path_between needs two distinct vertices");
    if (!is_connected(g)) return std::nullopt;
    PathTable table;
    table.fill_from(g, s, deadline);
    std::uint32_t full = (g.n == 32) ? ~0u : ((1u << g.n) - 1);
    if (!(table.reach[full] & (1u << t))) return std::nullopt;
    return table.backtrack(g, s, t);
}

HamiltonVerdict is_hamilton_connected(const Graph& g, bool keep_witnesses, Deadline deadline) {
    check_oracle_input(g, 3);
    HamiltonVerdict verdict;

    if (!is_connected(g)) {
        verdict.failing_pair = {0, 1};
        return verdict;
    }
    if (g.n == 3) {
        // K3 is the only Hamilton-connected graph on three vertices. For a
        // connected non-complete one (a path), exactly the pairs touching the
        // middle vertex fail.
        if (g.edge_count() == 3) {
            verdict.hamilton_connected = true;
            if (keep_witnesses) {
                verdict.witnesses[{0, 1}] = {0, 2, 1};
                verdict.witnesses[{0, 2}] = {0, 1, 2};
                verdict.witnesses[{1, 2}] = {1, 0, 2};
            }
        } else {
            int centre = g.degree(0) == 2 ? 0 : (g.degree(1) == 2 ? 1 : 2);
            verdict.failing_pair = centre <= 1 ? std::pair<int, int>{0, 1}
                                               : std::pair<int, int>{0, 2};
        }
        return verdict;
    }
    // A vertex of degree <= 1 away from {0,1} cannot be interior to a
    // spanning 0-1 path, so (0,1) already fails.
    for (int w = 2; w < g.n; ++w) {
        if (g.degree(w) <= 1) {
            verdict.failing_pair = {0, 1};
            return verdict;
        }
    }

    const std::uint32_t full = (g.n == 32) ? ~0u : ((1u << g.n) - 1);
    PathTable table;
    for (int s = 0; s < g.n - 1; ++s) {
        table.fill_from(g, s, deadline);
        std::uint32_t got = table.reach[full];
        for (int t = s + 1; t < g.n; ++t) {
            if (!(got & (1u << t))) {
                verdict.failing_pair = {s, t};
                return verdict;
            }
            if (keep_witnesses) verdict.witnesses[{s, t}] = table.backtrack(g, s, t);
        }
    }
    verdict.hamilton_connected = true;
    return verdict;
}

bool is_hamiltonian(const Graph& g, Deadline deadline) {
    check_oracle_input(g, 3);
    if (!is_connected(g) || g.min_degree() < 2) return false;
    PathTable table;
    table.fill_from(g, 0, deadline);
    std::uint32_t full = (g.n == 32) ? ~0u : ((1u << g.n) - 1);
    return (table.reach[full] & static_cast<std::uint32_t>(g.adj[0])) != 0;
}

bool is_traceable(const Graph& g, Deadline deadline) {
    check_oracle_input(g, 1);
    if (g.n == 1) return true;
    if (!is_connected(g)) return false;
    if (g.n == 2) return true;  // connected on two vertices means one edge
    // Unanchored DP: every singleton is a valid start.
    const std::uint32_t full = (g.n == 32) ? ~0u : ((1u << g.n) - 1);
    std::vector<std::uint32_t> reach(size_t{1} << g.n, 0);
    for (int v = 0; v < g.n; ++v) reach[1u << v] = 1u << v;
    for (std::uint32_t mask = 1;; ++mask) {
        if (mask > full) break;
        std::uint32_t ends = reach[mask];
        if (!ends) continue;
        if (mask == full) return true;
        if (deadline && (mask & 0xfff) == 0 && std::chrono::steady_clock::now() > *deadline)
            throw oracle_timeout("traceability search timed out (n=" + std::to_string(g.n) + ")");
        std::uint32_t grow = 0;
        std::uint32_t e = ends;
        while (e) {
            int u = std::countr_zero(e);
            e &= e - 1;
            grow |= static_cast<std::uint32_t>(g.adj[static_cast<size_t>(u)]);
        }
        grow &= full & ~mask;
        while (grow) {
            int v = std::countr_zero(grow);
            grow &= grow - 1;
            if (ends & static_cast<std::uint32_t>(g.adj[static_cast<size_t>(v)]))
                reach[mask | (1u << v)] |= 1u << v;
        }
    }
    return (reach[full] != 0);
}

}  // namespace hamspec
