#include "hamspec/spectra.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "hamspec/errors.hpp"

namespace hamspec {

namespace {

constexpr long max_power_iterations = 1'000'000;

// Power iteration on M + I restricted to the vertices in `verts` (the +1
// shift keeps bipartite adjacency matrices from oscillating and is removed
// from the reported value implicitly via the Rayleigh quotient of M itself).
SpectralResult power_iterate(const Graph& g, const std::vector<int>& verts, MatrixKind kind,
                             double tol) {
    const size_t k = verts.size();
    if (k == 1) return {0.0, 0.0, 0};

    std::vector<int> pos(static_cast<size_t>(g.n), -1);
    for (size_t i = 0; i < k; ++i) pos[static_cast<size_t>(verts[i])] = static_cast<int>(i);

    std::vector<double> deg(k);
    std::vector<std::vector<int>> nbr(k);
    for (size_t i = 0; i < k; ++i) {
        vset row = g.adj[static_cast<size_t>(verts[i])];
        deg[i] = static_cast<double>(std::popcount(row));
        while (row) {
            int v = std::countr_zero(row);
            row &= row - 1;
            nbr[i].push_back(pos[static_cast<size_t>(v)]);
        }
    }

    std::vector<double> x(k, 1.0 / std::sqrt(static_cast<double>(k)));
    std::vector<double> y(k);
    double lambda = 0.0;
    for (long it = 1; it <= max_power_iterations; ++it) {
        for (size_t i = 0; i < k; ++i) {
            double acc = 0.0;
            for (int j : nbr[i]) acc += x[static_cast<size_t>(j)];
            if (kind == MatrixKind::signless_laplacian) acc += deg[i] * x[i];
            y[i] = acc;  // y = M x
        }
        double num = 0.0;
        for (size_t i = 0; i < k; ++i) num += x[i] * y[i];
        lambda = num;  // x is unit, so this is the Rayleigh quotient
        double res2 = 0.0;
        for (size_t i = 0; i < k; ++i) {
            double r = y[i] - lambda * x[i];
            res2 += r * r;
        }
        double residual = std::sqrt(res2);
        if (residual <= tol) return {lambda, residual, it};

        double norm2 = 0.0;
        for (size_t i = 0; i < k; ++i) {
            y[i] += x[i];  // shift: iterate with M + I
            norm2 += y[i] * y[i];
        }
        double inv = 1.0 / std::sqrt(norm2);
        for (size_t i = 0; i < k; ++i) x[i] = y[i] * inv;
    }
    throw numeric_error("power iteration did not reach tol " + std::to_string(tol) + " in " +
                        std::to_string(max_power_iterations) + " iterations (n=" +
                        std::to_string(g.n) + ", block=" + std::to_string(k) + ")");
}

SpectralResult radius_by_components(const Graph& g, MatrixKind kind, double tol) {
    if (g.n < 1) throw std::invalid_argument("spectral radius needs at least one vertex");
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    SpectralResult best{-1.0, 0.0, 0};
    vset left = g.all_vertices();
    while (left) {
        int v = std::countr_zero(left);
        vset comp = component_of(g, v);
        left &= ~comp;
        std::vector<int> verts;
        vset c = comp;
        while (c) {
            verts.push_back(std::countr_zero(c));
            c &= c - 1;
        }
        SpectralResult r = power_iterate(g, verts, kind, tol);
        if (r.value > best.value) best = {r.value, r.residual, best.iterations + r.iterations};
        else best.iterations += r.iterations;
    }
    return best;
}

}  // namespace

SpectralResult spectral_radius(const Graph& g, double tol) {
    return radius_by_components(g, MatrixKind::adjacency, tol);
}

SpectralResult signless_laplacian_radius(const Graph& g, double tol) {
    return radius_by_components(g, MatrixKind::signless_laplacian, tol);
}

Partition validate_partition(const Graph& g, const Partition& p) {
    std::vector<bool> seen(static_cast<size_t>(g.n), false);
    if (p.blocks.empty()) throw std::invalid_argument("partition has no blocks");
    for (const auto& block : p.blocks) {
        if (block.empty()) throw std::invalid_argument("partition has an empty block");
        for (int v : block) {
            if (v < 0 || v >= g.n)
                throw std::invalid_argument("partition vertex " + std::to_string(v) +
                                            " out of range");
            if (seen[static_cast<size_t>(v)])
                throw std::invalid_argument("vertex " + std::to_string(v) +
                                            " appears in two blocks");
            seen[static_cast<size_t>(v)] = true;
        }
    }
    for (int v = 0; v < g.n; ++v)
        if (!seen[static_cast<size_t>(v)])
            throw std::invalid_argument("vertex " + std::to_string(v) + " missing from partition");
    return p;
}

Partition degree_partition(const Graph& g) {
    std::map<int, std::vector<int>, std::greater<>> by_degree;
    for (int v = 0; v < g.n; ++v) by_degree[g.degree(v)].push_back(v);
    Partition p;
    for (auto& [d, verts] : by_degree) p.blocks.push_back(std::move(verts));
    return p;
}

QuotientMatrix quotient_matrix(const Graph& g, const Partition& p0, MatrixKind kind) {
    Partition p = validate_partition(g, p0);
    const int m = static_cast<int>(p.blocks.size());
    std::vector<vset> block_mask(static_cast<size_t>(m), 0);
    for (int i = 0; i < m; ++i)
        for (int v : p.blocks[static_cast<size_t>(i)]) block_mask[static_cast<size_t>(i)] |= vbit(v);

    QuotientMatrix qm;
    qm.size = m;
    qm.block_total.assign(static_cast<size_t>(m) * m, 0);
    for (int i = 0; i < m; ++i) {
        qm.block_sizes.push_back(static_cast<int>(p.blocks[static_cast<size_t>(i)].size()));
        for (int v : p.blocks[static_cast<size_t>(i)]) {
            for (int j = 0; j < m; ++j) {
                long long t = std::popcount(g.adj[static_cast<size_t>(v)] &
                                            block_mask[static_cast<size_t>(j)]);
                if (kind == MatrixKind::signless_laplacian && i == j) t += g.degree(v);
                qm.block_total[static_cast<size_t>(i) * m + j] += t;
            }
        }
    }
    return qm;
}

bool is_equitable(const Graph& g, const Partition& p0, MatrixKind kind) {
    Partition p = validate_partition(g, p0);
    const int m = static_cast<int>(p.blocks.size());
    std::vector<vset> block_mask(static_cast<size_t>(m), 0);
    for (int i = 0; i < m; ++i)
        for (int v : p.blocks[static_cast<size_t>(i)]) block_mask[static_cast<size_t>(i)] |= vbit(v);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            long long want = -1;
            for (int v : p.blocks[static_cast<size_t>(i)]) {
                long long t = std::popcount(g.adj[static_cast<size_t>(v)] &
                                            block_mask[static_cast<size_t>(j)]);
                if (kind == MatrixKind::signless_laplacian && i == j) t += g.degree(v);
                if (want < 0) want = t;
                else if (t != want) return false;
            }
        }
    }
    return true;
}

namespace {

// Exact rational arithmetic for the quotient characteristic polynomial.
// Numerators stay far below the __int128 range for size <= 8 quotients.
struct Frac {
    __int128 num = 0;
    __int128 den = 1;
};

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Frac reduce(Frac f) {
    if (f.den < 0) {
        f.den = -f.den;
        f.num = -f.num;
    }
    __int128 g = gcd128(f.num, f.den);
    if (g > 1) {
        f.num /= g;
        f.den /= g;
    }
    if (f.num == 0) f.den = 1;
    return f;
}

Frac add(Frac a, Frac b) { return reduce({a.num * b.den + b.num * a.den, a.den * b.den}); }
Frac mul(Frac a, Frac b) { return reduce({a.num * b.num, a.den * b.den}); }
Frac neg(Frac a) { return {-a.num, a.den}; }

using FPoly = std::vector<Frac>;  // ascending coefficients

FPoly fp_add(const FPoly& a, const FPoly& b) {
    FPoly r(std::max(a.size(), b.size()), Frac{});
    for (size_t i = 0; i < a.size(); ++i) r[i] = add(r[i], a[i]);
    for (size_t i = 0; i < b.size(); ++i) r[i] = add(r[i], b[i]);
    return r;
}

FPoly fp_mul(const FPoly& a, const FPoly& b) {
    FPoly r(a.size() + b.size() - 1, Frac{});
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = add(r[i + j], mul(a[i], b[j]));
    return r;
}

// det(xI - B) by expansion over column subsets: D[S] is the determinant of
// the minor on rows 0..|S|-1 and columns S. O(2^m * m) polynomial ops.
FPoly charpoly_fractions(const QuotientMatrix& qm) {
    const int m = qm.size;
    auto entry = [&](int i, int j) -> FPoly {
        Frac b = reduce({-qm.block_total[static_cast<size_t>(i) * m + j],
                         qm.block_sizes[static_cast<size_t>(i)]});
        if (i == j) return {b, Frac{1, 1}};  // x - B[i][i]
        return {b};                          // -B[i][j]
    };
    std::vector<FPoly> d(size_t{1} << m);
    d[0] = {Frac{1, 1}};
    for (unsigned s = 1; s < (1u << m); ++s) {
        int row = std::popcount(s) - 1;  // expand along the last row of the minor
        FPoly acc{Frac{}};
        int idx = 0;
        for (unsigned rest = s; rest; rest &= rest - 1, ++idx) {
            int col = std::countr_zero(rest);
            FPoly term = fp_mul(entry(row, col), d[s & ~(1u << col)]);
            if ((row + idx) % 2 == 1)
                for (auto& f : term) f = neg(f);
            acc = fp_add(acc, term);
        }
        d[s] = std::move(acc);
    }
    return d[(size_t{1} << m) - 1];
}

}  // namespace

std::optional<IntPolynomial> quotient_charpoly(const QuotientMatrix& qm) {
    if (qm.size < 1 || qm.size > 8)
        throw std::invalid_argument("quotient_charpoly supports sizes 1..8");
    FPoly p = charpoly_fractions(qm);
    std::vector<long long> c;
    for (const Frac& f : p) {
        Frac r = reduce(f);
        if (r.den != 1) return std::nullopt;
        if (r.num > static_cast<__int128>(9'000'000'000'000'000'000LL) ||
            r.num < -static_cast<__int128>(9'000'000'000'000'000'000LL))
            throw numeric_error("quotient charpoly coefficient overflows 64 bits");
        c.push_back(static_cast<long long>(r.num));
    }
    return make_polynomial(std::move(c));
}

double largest_eigenvalue_small(const QuotientMatrix& qm, double tol) {
    if (qm.size < 1 || qm.size > 8)
        throw std::invalid_argument("largest_eigenvalue_small supports sizes 1..8");
    const int m = qm.size;
    double max_row = 0.0, min_entry = 0.0;
    for (int i = 0; i < m; ++i) {
        double row = 0.0;
        for (int j = 0; j < m; ++j) {
            double e = qm.entry(i, j);
            row += e;
            min_entry = std::min(min_entry, e);
        }
        max_row = std::max(max_row, row);
    }
    if (min_entry < 0.0)
        throw std::invalid_argument("largest_eigenvalue_small expects a nonnegative quotient");
    if (m == 1) return qm.entry(0, 0);

    FPoly fp = charpoly_fractions(qm);
    // Evaluate with doubles; coefficients of size <= 8 quotients fit fine.
    std::vector<double> c;
    for (const Frac& f : fp)
        c.push_back(static_cast<double>(f.num) / static_cast<double>(f.den));
    auto eval_c = [&](double x) {
        double acc = 0.0;
        for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
        return acc;
    };
    // Perron root lies in [0, max_row]; sweep down, then bisect.
    double hi = max_row + 1.0, lo = -1.0;
    constexpr int steps = 4096;
    double x_hi = hi, f_hi = eval_c(x_hi);
    for (int k = steps - 1; k >= 0; --k) {
        double x_lo = lo + (hi - lo) * k / steps;
        double f_lo = eval_c(x_lo);
        if (f_lo == 0.0) return x_lo;  // grid point is an exact root
        if ((f_lo < 0.0) != (f_hi < 0.0)) {
            double a = x_lo, b = x_hi, fa = f_lo;
            while (b - a > tol) {
                double mid = 0.5 * (a + b);
                double fm = eval_c(mid);
                if (fm == 0.0) return mid;
                if ((fm < 0.0) == (fa < 0.0)) {
                    a = mid;
                    fa = fm;
                } else {
                    b = mid;
                }
            }
            return 0.5 * (a + b);
        }
        x_hi = x_lo;
        f_hi = f_lo;
    }
    throw numeric_error("largest_eigenvalue_small: no sign change below the Perron bound");
}

double hong_nikiforov_bound(long long n, long long m, double x) {
    if (n < 1) throw std::domain_error("bound needs n >= 1");
    if (m < 0 || 2 * m > n * (n - 1)) throw std::domain_error("impossible edge count");
    if (x < 0.0 || x > static_cast<double>(n - 1))
        throw std::domain_error("bound parameter x outside [0, n-1]");
    double rad = 2.0 * static_cast<double>(m) - static_cast<double>(n) * x +
                 (1.0 + x) * (1.0 + x) / 4.0;
    if (rad < 0.0) throw std::domain_error("bound radicand negative");
    return (x - 1.0) / 2.0 + std::sqrt(rad);
}

double signless_laplacian_upper_bound(long long n, long long m) {
    if (n < 2) throw std::domain_error("bound needs n >= 2");
    if (m < 0 || 2 * m > n * (n - 1)) throw std::domain_error("impossible edge count");
    return 2.0 * static_cast<double>(m) / static_cast<double>(n - 1) +
           static_cast<double>(n - 2);
}

}  // namespace hamspec
