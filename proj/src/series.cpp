#include "tsat/series.hpp"

#include <algorithm>

namespace tsat {
namespace series {

Series denominator(const words::ForbiddenSet& fs, int N) {
    if (N < 1) throw std::invalid_argument("denominator: need N >= 1");
    Series s;
    s.c.assign(static_cast<size_t>(N) + 1, mpq_class(0));
    s.c[0] = 1;
    s.c[1] = -fs.m;
    for (const auto& [j, set] : fs.by_length)
        if (j <= N) s.c[static_cast<size_t>(j)] = static_cast<long>(set.size());
    return s;
}

QPoly denominator_poly(const words::ForbiddenSet& fs) {
    std::vector<mpq_class> c(static_cast<size_t>(std::max(fs.max_length(), 1)) + 1, mpq_class(0));
    c[0] = 1;
    c[1] = -fs.m;
    for (const auto& [j, set] : fs.by_length) c[static_cast<size_t>(j)] = static_cast<long>(set.size());
    return QPoly(std::move(c));
}

Series invert(const Series& A, int N) {
    if (A.c.empty() || A.c[0] == 0)
        throw std::invalid_argument("invert: constant term is zero, series not invertible");
    Series g;
    g.c.assign(static_cast<size_t>(N) + 1, mpq_class(0));
    mpq_class inv0 = 1 / A.c[0];
    g.c[0] = inv0;
    for (int n = 1; n <= N; ++n) {
        mpq_class acc = 0;
        int top = std::min<int>(n, A.order());
        for (int i = 1; i <= top; ++i)
            acc += A.c[static_cast<size_t>(i)] * g.c[static_cast<size_t>(n - i)];
        g.c[static_cast<size_t>(n)] = -inv0 * acc;
    }
    return g;
}

Series mul_truncated(const Series& a, const Series& b, int N) {
    Series r;
    r.c.assign(static_cast<size_t>(N) + 1, mpq_class(0));
    for (size_t i = 0; i < a.c.size() && i <= static_cast<size_t>(N); ++i) {
        if (a.c[i] == 0) continue;
        size_t top = std::min(b.c.size(), static_cast<size_t>(N) + 1 - i);
        for (size_t j = 0; j < top; ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    return r;
}

bool check_recurrence(const words::ForbiddenSet& fs, const std::vector<mpz_class>& s) {
    if (s.empty()) return true;
    QPoly A = denominator_poly(fs);
    int smax = static_cast<int>(s.size()) - 1;
    for (int d = 2; d <= smax; ++d) {
        mpq_class coeff = 0;
        int top = std::min<int>(d, A.degree());
        for (int i = 0; i <= top; ++i)
            coeff += A.c[static_cast<size_t>(i)] * mpq_class(s[static_cast<size_t>(d - i)]);
        if (coeff < 0) return false;
    }
    return true;
}

namespace {

void require_denominator_shape(const QPoly& A) {
    if (A.degree() < 1 || A.coeff(0) != 1 || A.coeff(1) >= 0)
        throw std::invalid_argument("find_positive_root: not of denominator shape");
    for (int j = 2; j <= A.degree(); ++j)
        if (A.coeff(static_cast<size_t>(j)) < 0)
            throw std::invalid_argument("find_positive_root: negative high coefficient");
    // convexity witness: second derivative has nonnegative coefficients
    QPoly dd = A.derivative().derivative();
    for (const auto& q : dd.c)
        if (q < 0) throw integrity_error("find_positive_root: convexity check failed");
}

}  // namespace

RootReport find_positive_root(const QPoly& A) {
    require_denominator_shape(A);
    RootReport rep;

    if (A.degree() == 1) {
        mpq_class r = -A.coeff(0) / A.coeff(1);
        rep.has_root = true;
        rep.bracket_lo = r;
        rep.bracket_hi = r;
        rep.tolerance = 0;
        rep.root = to_double(r);
        return rep;
    }

    // minimizer probe (A' is increasing from A'(0) = c1 < 0 and ends
    // positive since the leading coefficient is positive)
    QPoly dA = A.derivative();
    rep.min_probe_x = convex_minimizer_probe(dA, mpq_class(1));
    rep.min_value = A.eval(rep.min_probe_x);
    rep.minimizer_found = true;

    int roots = count_distinct_positive_roots(A);
    rep.has_root = roots >= 1;
    if (!rep.has_root) return rep;

    QPoly g = poly_gcd(A, dA);
    rep.tangent = g.degree() >= 1 && count_distinct_positive_roots(g) >= 1;

    mpq_class width = make_q(1, 1);
    width /= (mpz_class(1) << 42);  // ~2.3e-13 < 1e-12
    mpq_class blo, bhi;
    isolate_smallest_positive_root(A, width, blo, bhi);
    rep.bracket_lo = blo;
    rep.bracket_hi = bhi;
    rep.tolerance = width;
    rep.root = to_double((blo + bhi) / 2);
    return rep;
}

PiontkovskyReport check_piontkovsky(const words::ForbiddenSet& fs, int N) {
    PiontkovskyReport rep;
    rep.truncation = N;
    rep.has_root = find_positive_root(denominator_poly(fs)).has_root;

    Series g = invert(denominator(fs, std::max(N, 1)), N);
    for (int n = 0; n <= N; ++n) {
        if (g.c[static_cast<size_t>(n)] <= 0) {
            rep.first_nonpositive_g = n;
            break;
        }
    }

    if (rep.has_root)
        rep.verdict = rep.first_nonpositive_g < 0 ? PiontkovskyReport::Verdict::Consistent
                                                  : PiontkovskyReport::Verdict::Contradiction;
    else
        rep.verdict = rep.first_nonpositive_g >= 0 ? PiontkovskyReport::Verdict::Consistent
                                                   : PiontkovskyReport::Verdict::Inconclusive;
    return rep;
}

bool remainder_invariants(const QPoly& A, const mpq_class& alpha, int steps) {
    if (A.degree() < 1 || A.coeff(0) <= 0)
        throw std::invalid_argument("remainder_invariants: need a0 > 0");
    for (int j = 2; j <= A.degree(); ++j)
        if (A.coeff(static_cast<size_t>(j)) < 0)
            throw std::invalid_argument("remainder_invariants: need a_j >= 0 for j >= 2");
    if (alpha <= 0 || A.eval(alpha) != 0)
        throw std::invalid_argument("remainder_invariants: alpha is not an exact positive root");

    QPoly R = QPoly::constant(mpq_class(1));
    mpq_class a0 = A.coeff(0);
    for (int k = 0; k < steps; ++k) {
        // R^(k) checks
        if (R.eval(alpha) != 1) return false;
        mpq_class lead = R.coeff(static_cast<size_t>(k));
        if (lead <= 0) return false;
        for (size_t i = 0; i < static_cast<size_t>(k); ++i)
            if (R.coeff(i) != 0)
                throw integrity_error("remainder_invariants: low coefficient survived division");
        for (size_t i = static_cast<size_t>(k) + 1; i < R.c.size(); ++i)
            if (R.coeff(i) > 0) return false;
        // next remainder
        R = R - A.scaled(lead / a0).times_xk(k);
    }
    return true;
}

}  // namespace series
}  // namespace tsat
