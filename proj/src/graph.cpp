#include "hamspec/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace hamspec {

namespace {

void check_order(int n) {
    if (n < 0 || n > max_vertices)
        throw std::invalid_argument("graph order " + std::to_string(n) +
                                    " outside [0, " + std::to_string(max_vertices) + "]");
}

void check_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.n)
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range [0, " +
                                    std::to_string(g.n) + ")");
}

}  // namespace

Graph Graph::empty(int n) {
    check_order(n);
    Graph g;
    g.n = n;
    g.adj.assign(static_cast<size_t>(n), 0);
    return g;
}

Graph Graph::build(int n, std::span<const std::pair<int, int>> edges) {
    Graph g = empty(n);
    for (auto [u, v] : edges) {
        check_vertex(g, u);
        check_vertex(g, v);
        if (u == v)
            throw std::invalid_argument("loop at vertex " + std::to_string(u));
        g.adj[u] |= vbit(v);
        g.adj[v] |= vbit(u);
    }
    return g;
}

Graph Graph::build(int n, std::initializer_list<std::pair<int, int>> edges) {
    return build(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

int Graph::degree(int v) const { return std::popcount(adj[v]); }

long Graph::edge_count() const {
    long twice = 0;
    for (vset row : adj) twice += std::popcount(row);
    return twice / 2;
}

int Graph::min_degree() const {
    if (n == 0) return 0;
    int d = max_vertices;
    for (int v = 0; v < n; ++v) d = std::min(d, degree(v));
    return d;
}

Graph Graph::with_edge(int u, int v) const {
    check_vertex(*this, u);
    check_vertex(*this, v);
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    Graph g = *this;
    g.adj[u] |= vbit(v);
    g.adj[v] |= vbit(u);
    return g;
}

Graph Graph::without_edge(int u, int v) const {
    check_vertex(*this, u);
    check_vertex(*this, v);
    Graph g = *this;
    g.adj[u] &= ~vbit(v);
    g.adj[v] &= ~vbit(u);
    return g;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(edge_count()));
    for (int u = 0; u < n; ++u) {
        vset higher = adj[u] >> (u + 1);
        while (higher) {
            int v = u + 1 + std::countr_zero(higher);
            out.emplace_back(u, v);
            higher &= higher - 1;
        }
    }
    return out;
}

int DegreeSequence::d(int i) const {
    if (i < 1 || i > size())
        throw std::out_of_range("degree index " + std::to_string(i) + " out of range [1, " +
                                std::to_string(size()) + "]");
    return sorted[static_cast<size_t>(i - 1)];
}

DegreeSequence degree_sequence(const Graph& g) {
    DegreeSequence ds;
    ds.sorted.reserve(static_cast<size_t>(g.n));
    for (int v = 0; v < g.n; ++v) ds.sorted.push_back(g.degree(v));
    std::sort(ds.sorted.begin(), ds.sorted.end());
    return ds;
}

Graph join(const Graph& a, const Graph& b) {
    if (a.n + b.n > max_vertices)
        throw std::invalid_argument("join order " + std::to_string(a.n + b.n) + " exceeds " +
                                    std::to_string(max_vertices));
    Graph g = Graph::empty(a.n + b.n);
    vset amask = a.all_vertices();
    vset bmask = g.all_vertices() & ~amask;
    for (int v = 0; v < a.n; ++v) g.adj[v] = a.adj[v] | bmask;
    for (int v = 0; v < b.n; ++v) g.adj[a.n + v] = (b.adj[v] << a.n) | amask;
    return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    if (a.n + b.n > max_vertices)
        throw std::invalid_argument("union order " + std::to_string(a.n + b.n) + " exceeds " +
                                    std::to_string(max_vertices));
    Graph g = Graph::empty(a.n + b.n);
    for (int v = 0; v < a.n; ++v) g.adj[v] = a.adj[v];
    for (int v = 0; v < b.n; ++v) g.adj[a.n + v] = b.adj[v] << a.n;
    return g;
}

Graph complement(const Graph& g) {
    Graph c = Graph::empty(g.n);
    vset all = g.all_vertices();
    for (int v = 0; v < g.n; ++v) c.adj[v] = all & ~g.adj[v] & ~vbit(v);
    return c;
}

Graph complete_graph(int n) {
    Graph g = Graph::empty(n);
    vset all = g.all_vertices();
    for (int v = 0; v < n; ++v) g.adj[v] = all & ~vbit(v);
    return g;
}

Graph empty_graph(int n) { return Graph::empty(n); }

Graph path_graph(int n) {
    Graph g = Graph::empty(n);
    for (int v = 0; v + 1 < n; ++v) {
        g.adj[v] |= vbit(v + 1);
        g.adj[v + 1] |= vbit(v);
    }
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    Graph g = path_graph(n);
    g.adj[0] |= vbit(n - 1);
    g.adj[n - 1] |= vbit(0);
    return g;
}

Graph complete_bipartite(int a, int b) { return join(empty_graph(a), empty_graph(b)); }

Graph star_graph(int leaves) { return complete_bipartite(1, leaves); }

Graph kelmans(const Graph& g, int u, int v) {
    check_vertex(g, u);
    check_vertex(g, v);
    if (u == v) throw std::invalid_argument("kelmans needs two distinct vertices");
    vset moved = g.adj[v] & ~g.adj[u] & ~vbit(u);
    Graph r = g;
    r.adj[v] &= ~moved;
    r.adj[u] |= moved;
    vset ubit = vbit(u), vb = vbit(v);
    for (int x = 0; x < g.n; ++x) {
        if (moved & vbit(x)) {
            r.adj[x] &= ~vb;
            r.adj[x] |= ubit;
        }
    }
    return r;
}

vset component_of(const Graph& g, int v) {
    check_vertex(g, v);
    vset seen = vbit(v);
    vset frontier = seen;
    while (frontier) {
        vset next = 0;
        while (frontier) {
            int x = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= g.adj[x];
        }
        frontier = next & ~seen;
        seen |= frontier;
    }
    return seen;
}

bool is_connected(const Graph& g) {
    if (g.n <= 1) return true;
    return component_of(g, 0) == g.all_vertices();
}

std::string format_degree_sequence(const DegreeSequence& ds) {
    std::string out;
    size_t i = 0;
    while (i < ds.sorted.size()) {
        size_t j = i;
        while (j < ds.sorted.size() && ds.sorted[j] == ds.sorted[i]) ++j;
        if (!out.empty()) out += ' ';
        out += std::to_string(ds.sorted[i]);
        if (j - i > 1) out += '^' + std::to_string(j - i);
        i = j;
    }
    return out;
}

}  // namespace hamspec
