#include "hamspec/iso.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "hamspec/codec.hpp"

namespace hamspec {

std::vector<int> refinement_colors(const Graph& g) {
    // Round signature of v = (old colour, sorted multiset of neighbour
    // colours); new colour ids are the ranks of the sorted signatures, so
    // they do not depend on vertex labels. Degree is the first round's
    // signature (old colour constant + neighbour count); iterate to the
    // fixed point. Scratch buffers are reused across rounds because this
    // runs once per graph on multi-million-graph corpus scans.
    const int n = g.n;
    std::vector<int> col(static_cast<size_t>(n), 0);
    if (n == 0) return col;
    std::vector<int> next_col(static_cast<size_t>(n));
    std::vector<int> idx(static_cast<size_t>(n));
    std::vector<int> flat(static_cast<size_t>(n) * n);  // neighbour colours, row v
    std::vector<int> len(static_cast<size_t>(n));

    auto sig_less = [&](int a, int b) {
        if (col[static_cast<size_t>(a)] != col[static_cast<size_t>(b)])
            return col[static_cast<size_t>(a)] < col[static_cast<size_t>(b)];
        const int* pa = flat.data() + static_cast<size_t>(a) * n;
        const int* pb = flat.data() + static_cast<size_t>(b) * n;
        return std::lexicographical_compare(pa, pa + len[static_cast<size_t>(a)], pb,
                                            pb + len[static_cast<size_t>(b)]);
    };
    auto sig_equal = [&](int a, int b) {
        return col[static_cast<size_t>(a)] == col[static_cast<size_t>(b)] &&
               len[static_cast<size_t>(a)] == len[static_cast<size_t>(b)] &&
               std::equal(flat.data() + static_cast<size_t>(a) * n,
                          flat.data() + static_cast<size_t>(a) * n + len[static_cast<size_t>(a)],
                          flat.data() + static_cast<size_t>(b) * n);
    };

    bool changed = true;
    while (changed) {
        for (int v = 0; v < n; ++v) {
            int* out = flat.data() + static_cast<size_t>(v) * n;
            int k = 0;
            vset row = g.adj[static_cast<size_t>(v)];
            while (row) {
                int u = std::countr_zero(row);
                row &= row - 1;
                out[k++] = col[static_cast<size_t>(u)];
            }
            std::sort(out, out + k);
            len[static_cast<size_t>(v)] = k;
        }
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(), sig_less);
        int rank = 0;
        next_col[static_cast<size_t>(idx[0])] = 0;
        for (int i = 1; i < n; ++i) {
            if (!sig_equal(idx[static_cast<size_t>(i)], idx[static_cast<size_t>(i - 1)])) ++rank;
            next_col[static_cast<size_t>(idx[static_cast<size_t>(i)])] = rank;
        }
        changed = (next_col != col);
        std::copy(next_col.begin(), next_col.end(), col.begin());
    }
    return col;
}

namespace {

struct IsoSearch {
    const Graph& a;
    const Graph& b;
    std::vector<int> col_a, col_b;
    std::vector<int> order;           // a's vertices, most-constrained first
    std::vector<int> image;           // image[av] = vertex of b or -1
    std::vector<bool> used;

    bool extend(size_t depth) {
        if (depth == order.size()) return true;
        int av = order[depth];
        for (int bv = 0; bv < b.n; ++bv) {
            if (used[static_cast<size_t>(bv)]) continue;
            if (col_b[static_cast<size_t>(bv)] != col_a[static_cast<size_t>(av)]) continue;
            bool ok = true;
            for (size_t d = 0; d < depth && ok; ++d) {
                int au = order[d];
                ok = a.has_edge(av, au) == b.has_edge(bv, image[static_cast<size_t>(au)]);
            }
            if (!ok) continue;
            image[static_cast<size_t>(av)] = bv;
            used[static_cast<size_t>(bv)] = true;
            if (extend(depth + 1)) return true;
            used[static_cast<size_t>(bv)] = false;
            image[static_cast<size_t>(av)] = -1;
        }
        return false;
    }
};

}  // namespace

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.n > 20 || b.n > 20)
        throw std::invalid_argument("are_isomorphic capped at 20 vertices");
    if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
    if (a.n == 0) return true;

    std::vector<int> ca = refinement_colors(a), cb = refinement_colors(b);
    std::vector<int> ha(ca), hb(cb);
    std::sort(ha.begin(), ha.end());
    std::sort(hb.begin(), hb.end());
    if (ha != hb) return false;  // colour class sizes differ

    IsoSearch search{a, b, ca, cb, {}, {}, {}};
    // Process small colour classes first; within a class, vertices with more
    // already-placed neighbours first would be even tighter, but class size
    // alone keeps the family graphs trivial.
    std::vector<int> class_size(static_cast<size_t>(a.n) + 1, 0);
    for (int c : ca) class_size[static_cast<size_t>(c)]++;
    search.order.resize(static_cast<size_t>(a.n));
    std::iota(search.order.begin(), search.order.end(), 0);
    std::stable_sort(search.order.begin(), search.order.end(), [&](int x, int y) {
        return class_size[static_cast<size_t>(ca[static_cast<size_t>(x)])] <
               class_size[static_cast<size_t>(ca[static_cast<size_t>(y)])];
    });
    search.image.assign(static_cast<size_t>(a.n), -1);
    search.used.assign(static_cast<size_t>(a.n), false);
    return search.extend(0);
}

Graph relabel(const Graph& g, const std::vector<int>& order) {
    if (static_cast<int>(order.size()) != g.n)
        throw std::invalid_argument("relabel order has wrong length");
    std::vector<int> slot(static_cast<size_t>(g.n), -1);
    for (int i = 0; i < g.n; ++i) slot[static_cast<size_t>(order[static_cast<size_t>(i)])] = i;
    Graph r = Graph::empty(g.n);
    for (int i = 0; i < g.n; ++i) {
        vset row = g.adj[static_cast<size_t>(order[static_cast<size_t>(i)])];
        vset out = 0;
        while (row) {
            int u = std::countr_zero(row);
            row &= row - 1;
            out |= vbit(slot[static_cast<size_t>(u)]);
        }
        r.adj[static_cast<size_t>(i)] = out;
    }
    return r;
}

std::string fingerprint(const Graph& g) {
    std::vector<int> col = refinement_colors(g);
    std::vector<int> order;
    std::vector<bool> placed(static_cast<size_t>(g.n), false);
    vset placed_mask = 0;
    // Greedy: next slot goes to the unplaced vertex with the smallest
    // refinement colour, ties broken by densest adjacency into the placed
    // prefix, then by original index. Deterministic and label-insensitive
    // except for the final index tie-break.
    auto key = [&](int v) {
        return std::tuple<int, vset, int>(col[static_cast<size_t>(v)],
                                          ~(g.adj[static_cast<size_t>(v)] & placed_mask), v);
    };
    for (int step = 0; step < g.n; ++step) {
        int best = -1;
        for (int v = 0; v < g.n; ++v) {
            if (placed[static_cast<size_t>(v)]) continue;
            if (best < 0 || key(v) < key(best)) best = v;
        }
        placed[static_cast<size_t>(best)] = true;
        placed_mask |= vbit(best);
        order.push_back(best);
    }
    return to_graph6(relabel(g, order));
}

}  // namespace hamspec
