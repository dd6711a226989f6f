#include "hamspec/polynomial.hpp"

#include <cmath>
#include <stdexcept>

#include "hamspec/errors.hpp"

namespace hamspec {

IntPolynomial make_polynomial(std::vector<long long> ascending) {
    while (ascending.size() > 1 && ascending.back() == 0) ascending.pop_back();
    if (ascending.empty()) ascending.push_back(0);
    return IntPolynomial{std::move(ascending)};
}

IntPolynomial derivative(const IntPolynomial& p) {
    std::vector<long long> d;
    for (size_t i = 1; i < p.c.size(); ++i) d.push_back(p.c[i] * static_cast<long long>(i));
    return make_polynomial(std::move(d));
}

double eval(const IntPolynomial& p, double x) {
    double acc = 0.0;
    for (size_t i = p.c.size(); i-- > 0;) acc = acc * x + static_cast<double>(p.c[i]);
    return acc;
}

bool fourier_budan_clear(const IntPolynomial& p, double a) {
    IntPolynomial q = p;
    while (true) {
        if (!(eval(q, a) > 0.0)) return false;
        if (q.degree() == 0) return true;
        q = derivative(q);
    }
}

double largest_real_root(const IntPolynomial& p, double lo, double hi, double tol) {
    if (!(lo < hi)) throw std::invalid_argument("largest_real_root: empty bracket");
    if (!(tol > 0.0)) throw std::invalid_argument("largest_real_root: tol must be positive");
    if (p.degree() < 1) throw std::invalid_argument("largest_real_root: constant polynomial");

    constexpr int steps = 4096;
    double x_hi = hi;
    double f_hi = eval(p, x_hi);
    if (f_hi == 0.0) return x_hi;
    for (int k = steps - 1; k >= 0; --k) {
        double x_lo = lo + (hi - lo) * k / steps;
        double f_lo = eval(p, x_lo);
        if (f_lo == 0.0) return x_lo;  // grid point is an exact root
        if ((f_lo < 0.0) != (f_hi < 0.0)) {
            // bisect [x_lo, x_hi]
            double a = x_lo, b = x_hi, fa = f_lo;
            while (b - a > tol) {
                double m = 0.5 * (a + b);
                double fm = eval(p, m);
                if (fm == 0.0) return m;
                if ((fm < 0.0) == (fa < 0.0)) {
                    a = m;
                    fa = fm;
                } else {
                    b = m;
                }
            }
            return 0.5 * (a + b);
        }
        x_hi = x_lo;
        f_hi = f_lo;
    }
    throw numeric_error("largest_real_root: no sign change in bracket");
}

namespace {
void check_instantiation_order(long long n) {
    if (n < 5) throw std::domain_error("polynomial family needs n >= 5");
}
}  // namespace

IntPolynomial s_family_edge_surplus(long long n) {
    check_instantiation_order(n);
    return make_polynomial({8 * n - 38, -(2 * n + 3), 3});
}

IntPolynomial h3_adjacency_charpoly(long long n) {
    check_instantiation_order(n);
    return make_polynomial({12 * n - 84, 4 * (n - 10), -(3 * n - 7), -(n - 6), 1});
}

IntPolynomial t3_adjacency_charpoly(long long n) {
    check_instantiation_order(n);
    return make_polynomial({10 * n - 56, 5 * n - 33, -(2 * n - 3), -(n - 5), 1});
}

IntPolynomial s3_signless_charpoly(long long n) {
    check_instantiation_order(n);
    return make_polynomial({-6 * (n - 3) * (n - 4), 2 * n * n - n - 24, -(3 * n - 5), 1});
}

IntPolynomial h3_signless_charpoly(long long n) {
    check_instantiation_order(n);
    return make_polynomial({6 * (n * n * n - 13 * n * n + 56 * n - 80),
                            -(2 * n * n * n - 7 * n * n - 56 * n + 220),
                            5 * n * n - 24 * n + 10, -(4 * n - 11), 1});
}

IntPolynomial t3_signless_charpoly(long long n) {
    check_instantiation_order(n);
    return make_polynomial({-8 * (n * n - 6 * n + 8), 2 * (n * n + n - 14), -(3 * n - 4), 1});
}

}  // namespace hamspec
