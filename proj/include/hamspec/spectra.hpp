#pragma once

#include <optional>
#include <vector>

#include "hamspec/graph.hpp"
#include "hamspec/polynomial.hpp"

namespace hamspec {

enum class MatrixKind { adjacency, signless_laplacian };

struct SpectralResult {
    double value = 0.0;
    double residual = 0.0;
    long iterations = 0;
};

// Largest eigenvalue of the adjacency matrix / signless Laplacian Q = D + A,
// by shifted power iteration from the all-ones vector. Deterministic; for a
// disconnected graph each component is handled separately and the max taken.
// The result satisfies |value - lambda_max| <= residual <= tol. Throws
// numeric_error if the iteration cap (1e6) is hit before the tolerance.
SpectralResult spectral_radius(const Graph& g, double tol = 1e-10);
SpectralResult signless_laplacian_radius(const Graph& g, double tol = 1e-10);

// Ordered partition of the vertex set into non-empty disjoint blocks
// covering all of 0..n-1.
struct Partition {
    std::vector<std::vector<int>> blocks;
};

Partition validate_partition(const Graph& g, const Partition& p);  // throws on bad input

// Partition of the vertices by degree, blocks ordered by descending degree.
Partition degree_partition(const Graph& g);

// Quotient matrix B of M under a partition: B[i][j] is the average row sum
// of the M-block (X_i, X_j). Entries are kept exactly as block_total / |X_i|.
struct QuotientMatrix {
    int size = 0;
    std::vector<long long> block_total;  // row-major, size*size
    std::vector<int> block_sizes;

    double entry(int i, int j) const {
        return static_cast<double>(block_total[static_cast<size_t>(i) * size + j]) /
               block_sizes[static_cast<size_t>(i)];
    }
};

QuotientMatrix quotient_matrix(const Graph& g, const Partition& p, MatrixKind kind);

// True when every vertex of block i has the same M-row sum into block j,
// for all i, j. For an equitable partition the quotient shares the largest
// eigenvalue of the full matrix.
bool is_equitable(const Graph& g, const Partition& p, MatrixKind kind);

// Exact characteristic polynomial of the quotient, available when all
// entries reduce to integers (always the case for equitable partitions).
std::optional<IntPolynomial> quotient_charpoly(const QuotientMatrix& qm);

// Largest (Perron) eigenvalue of a small nonnegative quotient matrix, via
// the characteristic polynomial and a bracketed root search. Intended for
// size <= 8.
double largest_eigenvalue_small(const QuotientMatrix& qm, double tol = 1e-10);

// Classical upper bounds used to localise spectral radii:
//   Hong/Nikiforov:   rho <= (x-1)/2 + sqrt(2m - n*x + (1+x)^2/4)
//     for any 0 <= x <= delta (monotone decreasing in x while
//     2m <= n(n-1), so x = delta gives the sharpest form);
//   signless Laplacian: q <= 2m/(n-1) + n - 2.
double hong_nikiforov_bound(long long n, long long m, double x);
double signless_laplacian_upper_bound(long long n, long long m);

}  // namespace hamspec
