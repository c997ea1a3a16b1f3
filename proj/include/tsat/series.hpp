#pragma once

#include <gmpxx.h>

#include <vector>

#include "tsat/forbidden.hpp"
#include "tsat/poly.hpp"
#include "tsat/word_census.hpp"

namespace tsat {
namespace series {

// Truncated power series: coefficients 0..order, zeros kept, order explicit.
struct Series {
    std::vector<mpq_class> c;

    int order() const { return static_cast<int>(c.size()) - 1; }
    const mpq_class& at(size_t i) const { return c[i]; }
};

// 1 - m x + a_2 x^2 + ... + a_L x^L, truncated/padded to order N.
Series denominator(const words::ForbiddenSet& fs, int N);

// same polynomial, untruncated, as a QPoly (for root work)
QPoly denominator_poly(const words::ForbiddenSet& fs);

// Inverse series Г with A*Г = 1 + O(x^(N+1)), by the long-division
// recurrence g_n = -(1/c0) * sum_{i>=1} c_i g_{n-i}. Requires A.c[0] != 0.
Series invert(const Series& A, int N);

// product truncated to order N
Series mul_truncated(const Series& a, const Series& b, int N);

// Coefficient-wise check that (sum s_n x^n) * A has nonnegative coefficients
// from degree 2 up — the counting recurrence
// s_{k+1} >= m s_k - a_2 s_{k-1} - a_3 s_{k-2} - ...
bool check_recurrence(const words::ForbiddenSet& fs, const std::vector<mpz_class>& s);

struct RootReport {
    bool has_root = false;
    double root = 0.0;           // midpoint of the certified bracket
    mpq_class bracket_lo;        // smallest positive root lies in (lo, hi]
    mpq_class bracket_hi;
    mpq_class tolerance;         // bracket width bound
    bool tangent = false;        // the minimum touches zero (double root)
    mpq_class min_probe_x;       // rational probe near the minimizer of A
    mpq_class min_value;         // A(min_probe_x), exact
    bool minimizer_found = false;
};

// Whether convex A (denominator shape: c0 = 1, c1 < 0, c_j >= 0) reaches
// zero on x > 0; the zero value counts. Exact verdict via Sturm counts; the
// smallest-root bracket is certified by Sturm bisection.
RootReport find_positive_root(const QPoly& A);

struct PiontkovskyReport {
    bool has_root = false;
    int first_nonpositive_g = -1;  // index of first g_n <= 0, or -1
    int truncation = 0;
    enum class Verdict { Consistent, Inconclusive, Contradiction } verdict =
        Verdict::Consistent;
};

// One-directional finite checks of "all g_n > 0 iff A has a positive root":
// a root with a nonpositive coefficient by N is a contradiction (bug);
// no root and no nonpositive coefficient by N is inconclusive at N.
PiontkovskyReport check_piontkovsky(const words::ForbiddenSet& fs, int N);

// Long-division remainder invariants at an exact rational root alpha of A
// (shape: c0 > 0, c_j >= 0 for j >= 2): every remainder R^(k) for k < steps
// evaluates to 1 at alpha, has positive leading coefficient and nonpositive
// trailing coefficients. Throws std::invalid_argument unless alpha is an
// exact root.
bool remainder_invariants(const QPoly& A, const mpq_class& alpha, int steps);

}  // namespace series
}  // namespace tsat
