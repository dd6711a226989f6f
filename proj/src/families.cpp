#include "hamspec/families.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include "hamspec/iso.hpp"

namespace hamspec {

namespace {

void check_s_params(int n, int k) {
    if (k < 1 || 2 * k > n)
        throw std::invalid_argument("s_graph needs 1 <= k <= n/2, got n=" + std::to_string(n) +
                                    " k=" + std::to_string(k));
    if (n > max_vertices) throw std::invalid_argument("s_graph order exceeds 64");
}

void check_t_params(int n, int k) {
    if (k < 1 || k > n - 2)
        throw std::invalid_argument("t_graph needs 1 <= k <= n-2, got n=" + std::to_string(n) +
                                    " k=" + std::to_string(k));
    if (n > max_vertices) throw std::invalid_argument("t_graph order exceeds 64");
}

}  // namespace

Graph s_graph(int n, int k) {
    check_s_params(n, k);
    Graph rest = disjoint_union(complete_graph(n - 2 * k + 1), empty_graph(k - 1));
    return join(complete_graph(k), rest);
}

Graph t_graph(int n, int k) {
    check_t_params(n, k);
    Graph rest = disjoint_union(complete_graph(n - k - 1), complete_graph(k - 1));
    return join(complete_graph(2), rest);
}

long s_graph_edges(int n, int k) {
    check_s_params(n, k);
    long big = n - 2 * k + 1;
    return static_cast<long>(k) * (k - 1) / 2 + static_cast<long>(k) * (n - k) +
           big * (big - 1) / 2;
}

long t_graph_edges(int n, int k) {
    check_t_params(n, k);
    long big = n - k - 1, small = k - 1;
    return 1 + 2L * (n - 2) + big * (big - 1) / 2 + small * (small - 1) / 2;
}

Graph named_variant(NamedVariant which, int n) {
    if (n < 11) throw std::invalid_argument("named variants are defined for n >= 11");
    switch (which) {
        // s_graph(n,3) labels: join {0,1,2}, clique {3..n-3}, independent {n-2,n-1}
        case NamedVariant::H1: return s_graph(n, 3).without_edge(0, 1);
        case NamedVariant::H2: return s_graph(n, 3).without_edge(0, 3);
        case NamedVariant::H3: return s_graph(n, 3).without_edge(3, 4);
        // t_graph(n,3) labels: join {0,1}, clique {2..n-3}, K_2 {n-2,n-1}
        case NamedVariant::T1: return t_graph(n, 3).without_edge(0, 1);
        case NamedVariant::T2: return t_graph(n, 3).without_edge(0, 2);
        case NamedVariant::T3: return t_graph(n, 3).without_edge(2, 3);
    }
    throw std::invalid_argument("unknown variant");
}

std::string variant_name(NamedVariant which) {
    switch (which) {
        case NamedVariant::H1: return "H1";
        case NamedVariant::H2: return "H2";
        case NamedVariant::H3: return "H3";
        case NamedVariant::T1: return "T1";
        case NamedVariant::T2: return "T2";
        case NamedVariant::T3: return "T3";
    }
    throw std::invalid_argument("unknown variant");
}

std::optional<NamedVariant> variant_by_name(const std::string& name) {
    for (NamedVariant v : {NamedVariant::H1, NamedVariant::H2, NamedVariant::H3,
                           NamedVariant::T1, NamedVariant::T2, NamedVariant::T3})
        if (variant_name(v) == name) return v;
    return std::nullopt;
}

void enumerate_deleted(const DeletedFamily& spec, bool dedup,
                       const std::function<bool(const Graph&)>& yield) {
    if (spec.family != 'S' && spec.family != 'T')
        throw std::invalid_argument("family must be 'S' or 'T'");
    Graph base = spec.family == 'S' ? s_graph(spec.n, spec.k) : t_graph(spec.n, spec.k);
    auto edges = base.edges();
    const int e = static_cast<int>(edges.size());
    if (spec.t < 0 || spec.t > e)
        throw std::invalid_argument("deletion count " + std::to_string(spec.t) +
                                    " outside [0, " + std::to_string(e) + "]");

    std::map<std::vector<int>, std::vector<Graph>> reps;  // degree sequence -> class reps

    std::vector<int> pick(static_cast<size_t>(spec.t));
    for (int i = 0; i < spec.t; ++i) pick[static_cast<size_t>(i)] = i;
    while (true) {
        Graph g = base;
        for (int i : pick) {
            auto [u, v] = edges[static_cast<size_t>(i)];
            g.adj[static_cast<size_t>(u)] &= ~vbit(v);
            g.adj[static_cast<size_t>(v)] &= ~vbit(u);
        }
        if (g.min_degree() >= 3) {
            bool fresh = true;
            if (dedup) {
                auto& bucket = reps[degree_sequence(g).sorted];
                for (const Graph& r : bucket)
                    if (are_isomorphic(g, r)) {
                        fresh = false;
                        break;
                    }
                if (fresh) bucket.push_back(g);
            }
            if (fresh && !yield(g)) return;
        }
        // next t-combination in lexicographic order
        if (spec.t == 0) break;
        int i = spec.t - 1;
        while (i >= 0 && pick[static_cast<size_t>(i)] == e - spec.t + i) --i;
        if (i < 0) break;
        ++pick[static_cast<size_t>(i)];
        for (int j = i + 1; j < spec.t; ++j)
            pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
    }
}

std::vector<Graph> enumerate_deleted_all(const DeletedFamily& spec, bool dedup) {
    std::vector<Graph> out;
    enumerate_deleted(spec, dedup, [&](const Graph& g) {
        out.push_back(g);
        return true;
    });
    return out;
}

bool membership_certificate_S3(const Graph& g) {
    for (int u = 0; u < g.n; ++u) {
        if (g.degree(u) != 3) continue;
        for (int v = u + 1; v < g.n; ++v) {
            if (g.has_edge(u, v)) continue;
            if (g.adj[static_cast<size_t>(u)] == g.adj[static_cast<size_t>(v)]) return true;
        }
    }
    return false;
}

bool membership_certificate_T3(const Graph& g) {
    for (int u = 0; u < g.n; ++u) {
        if (g.degree(u) != 3) continue;
        vset closed_u = g.adj[static_cast<size_t>(u)] | vbit(u);
        vset cands = g.adj[static_cast<size_t>(u)] & ~(vbit(u) - 1);  // neighbours v > u
        while (cands) {
            int v = std::countr_zero(cands);
            cands &= cands - 1;
            if (g.degree(v) == 3 && (g.adj[static_cast<size_t>(v)] | vbit(v)) == closed_u)
                return true;
        }
    }
    return false;
}

namespace {

bool independent_set_with_small_hull(const Graph& g, int need, int k, int from, vset chosen,
                                     vset hull) {
    if (need == 0) return true;
    for (int v = from; v < g.n; ++v) {
        vset b = vbit(v);
        if ((chosen | hull) & b) continue;  // in hull means adjacent to a chosen vertex
        vset new_hull = hull | g.adj[static_cast<size_t>(v)];
        if (new_hull & chosen) continue;    // v adjacent to an earlier pick
        if (std::popcount(new_hull) > k) continue;
        if (independent_set_with_small_hull(g, need - 1, k, v + 1, chosen | b, new_hull))
            return true;
    }
    return false;
}

}  // namespace

bool spanning_subgraph_of_s(const Graph& g, int k) {
    if (k < 2 || 2 * k > g.n) return false;
    return independent_set_with_small_hull(g, k - 1, k, 0, 0, 0);
}

// G fits inside a relabeled t_graph(n, 3) exactly when two vertices can play the
// small-K2 block: everything else they touch must fit in the 2-vertex join block.
bool spanning_subgraph_of_t3(const Graph& g) {
    if (g.n < 5) return false;  // t_graph(n, 3) needs n >= 5
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v) {
            vset hull = (g.adj[static_cast<size_t>(u)] | g.adj[static_cast<size_t>(v)]) &
                        ~vbit(u) & ~vbit(v);
            if (std::popcount(hull) <= 2) return true;
        }
    return false;
}

std::vector<NamedGraph> np1_graphs(int n) {
    std::vector<NamedGraph> out;
    if (n >= 6 && n <= max_vertices) out.push_back({"S_n_3", s_graph(n, 3)});
    if (n == 12) out.push_back({"K6v6K1", join(complete_graph(6), empty_graph(6))});
    if (n == 9)
        out.push_back({"K4v(K2+3K1)",
                       join(complete_graph(4), disjoint_union(complete_graph(2), empty_graph(3)))});
    if (n == 10) {
        out.push_back({"K5v5K1", join(complete_graph(5), empty_graph(5))});
        out.push_back({"K4v(K1,4+K1)",
                       join(complete_graph(4), disjoint_union(star_graph(4), empty_graph(1)))});
        out.push_back({"K4v(K1,3+K2)",
                       join(complete_graph(4), disjoint_union(star_graph(3), complete_graph(2)))});
        out.push_back({"K3vK2,5", join(complete_graph(3), complete_bipartite(2, 5))});
    }
    if (n == 8) {
        out.push_back({"K4v4K1", join(complete_graph(4), empty_graph(4))});
        out.push_back({"K3v(K1+K1,3)",
                       join(complete_graph(3), disjoint_union(empty_graph(1), star_graph(3)))});
        out.push_back({"K3v(K1,2+K2)",
                       join(complete_graph(3), disjoint_union(star_graph(2), complete_graph(2)))});
        out.push_back({"K2vK2,4", join(complete_graph(2), complete_bipartite(2, 4))});
    }
    return out;
}

Graph sporadic_exception(Sporadic which, std::optional<int> n) {
    switch (which) {
        case Sporadic::S11_5:
            if (n && *n != 11) throw std::invalid_argument("S11_5 has order 11");
            return s_graph(11, 5);
        case Sporadic::S13_6:
            if (n && *n != 13) throw std::invalid_argument("S13_6 has order 13");
            return s_graph(13, 6);
        case Sporadic::K7_K2_K16:
            if (n && *n != 16) throw std::invalid_argument("K7_K2_K16 has order 16");
            return join(complete_graph(7),
                        disjoint_union(complete_graph(2), star_graph(6)));
        case Sporadic::Kn1_ee: {
            if (!n) throw std::invalid_argument("Kn1_ee needs an order");
            if (*n < 4 || *n > max_vertices)
                throw std::invalid_argument("Kn1_ee needs 4 <= n <= 64");
            Graph g = disjoint_union(complete_graph(*n - 1), empty_graph(1));
            return g.with_edge(*n - 1, 0).with_edge(*n - 1, 1);
        }
    }
    throw std::invalid_argument("unknown sporadic exception");
}

std::string sporadic_name(Sporadic which) {
    switch (which) {
        case Sporadic::S11_5: return "S11_5";
        case Sporadic::S13_6: return "S13_6";
        case Sporadic::K7_K2_K16: return "K7_K2_K16";
        case Sporadic::Kn1_ee: return "Kn1_ee";
    }
    throw std::invalid_argument("unknown sporadic exception");
}

bool is_s3_graph(const Graph& g) {
    return g.n >= 6 && membership_certificate_S3(g) && g.min_degree() >= 3 &&
           g.edge_count() == s_graph_edges(g.n, 3);
}

bool is_t3_graph(const Graph& g) {
    return g.n >= 6 && membership_certificate_T3(g) && g.min_degree() >= 3 &&
           g.edge_count() == t_graph_edges(g.n, 3);
}

bool is_kn1_ee(const Graph& g) {
    if (g.n < 4) return false;
    for (int w = 0; w < g.n; ++w) {
        if (g.degree(w) != 2) continue;
        bool complete_rest = true;
        for (int u = 0; u < g.n && complete_rest; ++u) {
            if (u == w) continue;
            vset missing = g.all_vertices() & ~g.adj[static_cast<size_t>(u)] & ~vbit(u) & ~vbit(w);
            complete_rest = missing == 0;
        }
        if (complete_rest) return true;
    }
    return false;
}

}  // namespace hamspec
