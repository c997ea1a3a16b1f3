#include "tsat/poly.hpp"

#include <algorithm>

namespace tsat {

mpq_class QPoly::eval(const mpq_class& x) const {
    mpq_class acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

QPoly QPoly::derivative() const {
    QPoly d;
    if (c.size() <= 1) return d;
    d.c.resize(c.size() - 1);
    for (size_t i = 1; i < c.size(); ++i) d.c[i - 1] = c[i] * static_cast<long>(i);
    d.norm();
    return d;
}

QPoly QPoly::operator+(const QPoly& o) const {
    QPoly r;
    r.c.resize(std::max(c.size(), o.c.size()));
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = coeff(i) + o.coeff(i);
    r.norm();
    return r;
}

QPoly QPoly::operator-(const QPoly& o) const {
    QPoly r;
    r.c.resize(std::max(c.size(), o.c.size()));
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = coeff(i) - o.coeff(i);
    r.norm();
    return r;
}

QPoly QPoly::operator*(const QPoly& o) const {
    QPoly r;
    if (zero() || o.zero()) return r;
    r.c.assign(c.size() + o.c.size() - 1, mpq_class(0));
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        for (size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
    }
    r.norm();
    return r;
}

QPoly QPoly::scaled(const mpq_class& k) const {
    QPoly r = *this;
    for (auto& x : r.c) x *= k;
    r.norm();
    return r;
}

QPoly QPoly::times_xk(int k) const {
    QPoly r;
    if (zero()) return r;
    r.c.assign(c.size() + static_cast<size_t>(k), mpq_class(0));
    for (size_t i = 0; i < c.size(); ++i) r.c[i + static_cast<size_t>(k)] = c[i];
    return r;
}

QPoly poly_rem(const QPoly& a, const QPoly& b) {
    if (b.zero()) throw std::invalid_argument("poly_rem: division by zero polynomial");
    QPoly r = a;
    mpq_class lead = b.c.back();
    int db = b.degree();
    while (!r.zero() && r.degree() >= db) {
        mpq_class f = r.c.back() / lead;
        int shift = r.degree() - db;
        // r -= f * x^shift * b
        for (int i = 0; i <= db; ++i)
            r.c[static_cast<size_t>(i + shift)] -= f * b.c[static_cast<size_t>(i)];
        r.norm();
    }
    return r;
}

QPoly poly_gcd(QPoly a, QPoly b) {
    while (!b.zero()) {
        QPoly r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.zero()) {
        mpq_class lead = a.c.back();
        for (auto& x : a.c) x /= lead;
    }
    return a;
}

mpq_class root_upper_bound(const QPoly& p) {
    if (p.degree() < 1) return mpq_class(1);
    mpq_class lead = abs(p.c.back());
    mpq_class mx = 0;
    for (size_t i = 0; i + 1 < p.c.size(); ++i) mx = std::max(mx, mpq_class(abs(p.c[i])));
    return 1 + mx / lead;
}

mpq_class convex_minimizer_probe(const QPoly& dA, mpq_class hi, int iters) {
    if (!(dA.eval(0) < 0))
        throw std::invalid_argument("minimizer probe: derivative not negative at 0");
    mpq_class lo = 0;
    int guard = 0;
    while (dA.eval(hi) < 0) {
        lo = hi;
        hi *= 2;
        if (++guard > 300) throw integrity_error("minimizer probe: derivative never turns");
    }
    for (int i = 0; i < iters; ++i) {
        mpq_class mid = (lo + hi) / 2;
        int s = sgn(dA.eval(mid));
        if (s == 0) return mid;
        if (s < 0)
            lo = mid;
        else
            hi = mid;
    }
    if (dA.eval(hi) == 0) return hi;
    return simplest_in_interval(lo, hi);
}

namespace {

std::vector<QPoly> sturm_chain(const QPoly& p) {
    std::vector<QPoly> chain;
    chain.push_back(p);
    QPoly d = p.derivative();
    if (!d.zero()) chain.push_back(d);
    while (chain.size() >= 2 && !chain.back().zero()) {
        QPoly r = poly_rem(chain[chain.size() - 2], chain.back());
        if (r.zero()) break;
        chain.push_back(r.scaled(mpq_class(-1)));
    }
    return chain;
}

int sign_variations(const std::vector<QPoly>& chain, const mpq_class& x) {
    int var = 0, prev = 0;
    for (const auto& p : chain) {
        mpq_class v = p.eval(x);
        int s = sgn(v);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

}  // namespace

int count_distinct_positive_roots(const QPoly& p) {
    if (p.zero()) throw std::invalid_argument("sturm: zero polynomial");
    if (p.eval(0) == 0) throw std::invalid_argument("sturm: p(0) == 0 unsupported");
    if (p.degree() == 0) return 0;
    auto chain = sturm_chain(p);
    mpq_class hi = root_upper_bound(p);
    return sign_variations(chain, mpq_class(0)) - sign_variations(chain, hi);
}

void isolate_smallest_positive_root(const QPoly& p, const mpq_class& width,
                                    mpq_class& lo, mpq_class& hi) {
    auto chain = sturm_chain(p);
    mpq_class b = root_upper_bound(p);
    int total = sign_variations(chain, mpq_class(0)) - sign_variations(chain, b);
    if (total < 1) throw std::invalid_argument("isolate: no positive root");
    lo = 0;
    hi = b;
    int at_lo = sign_variations(chain, lo);
    // keep the invariant: (lo, hi] contains the smallest positive root
    while (hi - lo > width) {
        mpq_class mid = (lo + hi) / 2;
        int at_mid = sign_variations(chain, mid);
        if (at_lo - at_mid >= 1) {
            hi = mid;  // a root (hence the smallest) is in (lo, mid]
        } else {
            lo = mid;
            at_lo = at_mid;
        }
    }
}

}  // namespace tsat
