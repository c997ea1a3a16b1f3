#include "tsat/rational.hpp"

#include <cmath>
#include <cstdio>

namespace tsat {

mpq_class parse_rational(const std::string& text) {
    std::string s = text;
    if (s.empty()) throw parse_error("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            mpz_class n(s);
            return mpq_class(n);
        }
        mpz_class num(s.substr(0, slash));
        mpz_class den(s.substr(slash + 1));
        if (den == 0) throw parse_error("zero denominator in '" + text + "'");
        return make_q(num, den);
    } catch (const std::invalid_argument&) {
        throw parse_error("malformed rational '" + text + "'");
    }
}

std::string rational_str(const mpq_class& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double to_double(const mpq_class& q) { return q.get_d(); }

static mpz_class floor_q(const mpq_class& q) {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

long ceil_log2(const mpq_class& value) {
    if (value <= 0) throw std::invalid_argument("ceil_log2: nonpositive value");
    auto two_to = [](long k) -> mpq_class {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(k >= 0 ? k : -k));
        if (k >= 0) return mpq_class(p);
        return make_q(mpz_class(1), p);
    };
    long nb = static_cast<long>(mpz_sizeinbase(value.get_num().get_mpz_t(), 2));
    long db = static_cast<long>(mpz_sizeinbase(value.get_den().get_mpz_t(), 2));
    long e = nb - db;  // within 1 of the answer
    while (two_to(e) < value) ++e;
    while (two_to(e - 1) >= value) --e;
    return e;
}

// Simplest (smallest-denominator) rational strictly inside (a, b), 0 <= a < b.
static mpq_class simplest_pos(const mpq_class& a, const mpq_class& b) {
    mpz_class ia = floor_q(a);
    if (mpq_class(ia + 1) < b) return mpq_class(ia + 1);  // integer inside
    mpq_class fa = a - mpq_class(ia);  // in [0,1)
    mpq_class fb = b - mpq_class(ia);  // in (0,1]
    mpq_class inner;
    if (fa == 0) {
        inner = mpq_class(floor_q(1 / fb) + 1);  // y in (1/fb, +inf)
    } else {
        inner = simplest_pos(1 / fb, 1 / fa);
    }
    return mpq_class(ia) + 1 / inner;
}

mpq_class simplest_in_interval(const mpq_class& lo, const mpq_class& hi) {
    if (!(lo < hi)) throw std::invalid_argument("simplest_in_interval: empty interval");
    mpq_class a = lo;
    if (a < 0 && hi > 0) return mpq_class(0);
    if (hi <= 0) {
        mpq_class r = simplest_pos(-hi, -lo);
        return -r;
    }
    return simplest_pos(a, hi);
}

mpq_class approx_from_double(double x, unsigned long max_den) {
    if (!std::isfinite(x)) throw std::invalid_argument("approx_from_double: non-finite");
    bool neg = x < 0;
    double v = std::fabs(x);
    mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double frac = v;
    for (int it = 0; it < 64; ++it) {
        double fl = std::floor(frac);
        if (fl > 1e18) break;
        mpz_class a(static_cast<unsigned long>(fl));
        mpz_class p2 = a * p1 + p0;
        mpz_class q2 = a * q1 + q0;
        if (q2 > static_cast<long>(max_den)) break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        double rem = frac - fl;
        if (rem < 1e-15) break;
        frac = 1.0 / rem;
    }
    if (q1 == 0) return mpq_class(0);
    mpq_class r = make_q(p1, q1);
    return neg ? mpq_class(-r) : r;
}

std::string fnv1a64_hex(const std::string& bytes) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

}  // namespace tsat
