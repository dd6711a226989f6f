#pragma once

#include <vector>

namespace hamspec {

// Dense univariate polynomial with exact integer coefficients, ascending
// order (c[0] + c[1] x + ...). Trailing zero coefficients are trimmed so the
// degree is size-1, except for the zero polynomial which keeps one term.
struct IntPolynomial {
    std::vector<long long> c;

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool operator==(const IntPolynomial&) const = default;
};

IntPolynomial make_polynomial(std::vector<long long> ascending);
IntPolynomial derivative(const IntPolynomial& p);  // exact
double eval(const IntPolynomial& p, double x);     // Horner

// True when p and every derivative of p are strictly positive at a. That
// rules out any real root >= a, which is how the quotient root-location
// arguments are closed.
bool fourier_budan_clear(const IntPolynomial& p, double a);

// Largest real root inside [lo, hi], found by a descending grid sweep until
// the sign flips, then bisection to tol. Throws numeric_error when the sweep
// never sees a sign change (e.g. the largest root in range is a double root).
double largest_real_root(const IntPolynomial& p, double lo, double hi, double tol);

// Case-analysis polynomial families, instantiated at a given order n. All
// coefficients are exact integers.
//
//   s_family_edge_surplus(n)(k) = 2*(e(S_n^k) - (C(n-3,2)+13)); its sign says
//     whether S_n^k clears the C(n-3,2)+13 edge threshold.
//   h3_adjacency_charpoly(n): characteristic polynomial of the 4x4 adjacency
//     quotient of H3 (S_n^3 minus one big-clique edge); its largest root is
//     the spectral radius of H3.
//   t3_adjacency_charpoly(n): same for T3 (T_n^3 minus one big-clique edge).
//   s3_signless_charpoly(n): characteristic polynomial of the signless-
//     Laplacian quotient of S_n^3 under degree classes; largest root = q(S_n^3).
//   h3_signless_charpoly(n): same for H3 (4 degree classes).
//   t3_signless_charpoly(n): same for T_n^3 (3 degree classes).
IntPolynomial s_family_edge_surplus(long long n);
IntPolynomial h3_adjacency_charpoly(long long n);
IntPolynomial t3_adjacency_charpoly(long long n);
IntPolynomial s3_signless_charpoly(long long n);
IntPolynomial h3_signless_charpoly(long long n);
IntPolynomial t3_signless_charpoly(long long n);

}  // namespace hamspec
