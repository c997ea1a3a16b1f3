#pragma once

#include <gmpxx.h>

#include <vector>

#include "tsat/rational.hpp"

namespace tsat {

// Dense polynomial / truncated power series over exact rationals.
// coeffs[i] is the coefficient of x^i; trailing zeros are trimmed by norm().
struct QPoly {
    std::vector<mpq_class> c;

    QPoly() = default;
    explicit QPoly(std::vector<mpq_class> coeffs) : c(std::move(coeffs)) { norm(); }

    static QPoly constant(const mpq_class& v) { return QPoly({v}); }

    void norm() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    bool zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero poly

    mpq_class coeff(size_t i) const { return i < c.size() ? c[i] : mpq_class(0); }

    mpq_class eval(const mpq_class& x) const;  // Horner, exact
    QPoly derivative() const;

    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly scaled(const mpq_class& k) const;
    QPoly times_xk(int k) const;  // multiply by x^k

    bool operator==(const QPoly& o) const { return c == o.c; }
};

// Remainder of polynomial division a / b (b nonzero), exact.
QPoly poly_rem(const QPoly& a, const QPoly& b);

// gcd over Q, returned monic; gcd(0,0) = 0.
QPoly poly_gcd(QPoly a, QPoly b);

// Number of DISTINCT real roots of p in the open interval (0, +inf).
// Canonical Sturm chain with exact rational arithmetic. Requires p(0) != 0.
int count_distinct_positive_roots(const QPoly& p);

// Shrinks [lo, hi] around the smallest positive root of p until
// hi - lo <= width. Uses exact Sturm counts at rational midpoints, so the
// bracket is certified: the interval (lo, hi] contains the smallest
// positive root. Requires at least one positive root and p(0) != 0.
void isolate_smallest_positive_root(const QPoly& p, const mpq_class& width,
                                    mpq_class& lo, mpq_class& hi);

// An upper bound beyond which p has no roots (Cauchy bound).
mpq_class root_upper_bound(const QPoly& p);

// Rational probe at the minimizer of a convex function whose increasing
// derivative is dA with dA(0) < 0: extends hi until dA(hi) >= 0, bisects
// with exact signs, and returns the exact root of dA when the bracket lands
// on one, else the simplest rational inside the bracket.
mpq_class convex_minimizer_probe(const QPoly& dA, mpq_class hi, int iters = 90);

}  // namespace tsat
