#include "tsat/coding.hpp"

#include <cmath>
#include <stdexcept>

namespace tsat {
namespace coding {

void SymbolModel::validate() const {
    if (probs.empty()) throw std::invalid_argument("symbol model: no symbols");
    mpq_class total = 0;
    for (const auto& q : probs) {
        if (q <= 0) throw std::invalid_argument("symbol model: nonpositive probability");
        total += q;
    }
    if (total > 1) throw std::invalid_argument("symbol model: probabilities sum past 1");
}

double binary_entropy(const mpq_class& p) {
    if (p < 0 || p > 1) throw std::domain_error("binary_entropy: p outside [0,1]");
    double a = p.get_d();
    double h = 0.0;
    if (a > 0.0) h += a * std::log2(1.0 / a);
    if (a < 1.0) h += (1.0 - a) * std::log2(1.0 / (1.0 - a));
    return h;
}

namespace {

// Model brought to a common integer scale B: prob i = num[i] / B.
struct ScaledModel {
    mpz_class B;
    std::vector<mpz_class> num;
    std::vector<mpz_class> cum;  // cum[i] = num[0] + .. + num[i-1]; size M+1

    explicit ScaledModel(const SymbolModel& m) {
        m.validate();
        B = 1;
        for (const auto& q : m.probs)
            mpz_lcm(B.get_mpz_t(), B.get_mpz_t(), q.get_den().get_mpz_t());
        num.reserve(m.size());
        cum.reserve(m.size() + 1);
        cum.push_back(0);
        for (const auto& q : m.probs) {
            mpz_class n = q.get_num() * (B / q.get_den());
            num.push_back(n);
            cum.push_back(cum.back() + n);
        }
    }
};

void check_symbol(const SymbolModel& model, int s) {
    if (s < 0 || static_cast<size_t>(s) >= model.size())
        throw std::invalid_argument("encode: unknown symbol id " + std::to_string(s));
}

}  // namespace

long ideal_bits(const SymbolModel& model, const std::vector<int>& symbols) {
    ScaledModel sm(model);
    mpz_class W = 1, D = 1;
    for (int s : symbols) {
        check_symbol(model, s);
        W *= sm.num[static_cast<size_t>(s)];
        D *= sm.B;
    }
    return ceil_log2(make_q(D, W));
}

CodeBits encode(const SymbolModel& model, const std::vector<int>& symbols) {
    ScaledModel sm(model);
    // interval [L/D, (L+W)/D), all integers, never reduced
    mpz_class L = 0, W = 1, D = 1;
    for (int s : symbols) {
        check_symbol(model, s);
        size_t i = static_cast<size_t>(s);
        L = L * sm.B + W * sm.cum[i];
        W *= sm.num[i];
        D *= sm.B;
    }
    // shortest binary fraction b/2^len inside the interval:
    // 2^-len <= W/(2D) guarantees ceil(L 2^len / D) lands before L+W
    long len = ceil_log2(make_q(D, W)) + 1;
    mpz_class scaled = L << static_cast<unsigned long>(len);
    mpz_class b;
    mpz_cdiv_q(b.get_mpz_t(), scaled.get_mpz_t(), D.get_mpz_t());
    CodeBits out;
    for (long i = len - 1; i >= 0; --i)
        out.bits.push(mpz_tstbit(b.get_mpz_t(), static_cast<mp_bitcnt_t>(i)));
    return out;
}

std::vector<int> decode(const SymbolModel& model, const CodeBits& code, size_t count) {
    if (count == 0) return {};
    if (code.length() == 0) throw parse_error("decode: empty code for nonempty message");
    ScaledModel sm(model);
    const size_t M = model.size();

    mpz_class z_num = 0;
    for (size_t i = 0; i < code.length(); ++i) {
        z_num <<= 1;
        if (code.bits[i]) z_num += 1;
    }
    mpz_class z_den = 1;
    z_den <<= static_cast<unsigned long>(code.length());

    std::vector<int> out;
    out.reserve(count);
    for (size_t t = 0; t < count; ++t) {
        mpz_class target = z_num * sm.B;
        // largest s with cum[s] * z_den <= target (monotone; s=0 always holds)
        size_t lo = 0, hi = M - 1;
        while (lo < hi) {
            size_t mid = (lo + hi + 1) / 2;
            if (sm.cum[mid] * z_den <= target)
                lo = mid;
            else
                hi = mid - 1;
        }
        if (sm.cum[lo + 1] * z_den <= target)
            throw parse_error("decode: code point outside model mass (corrupt bits?)");
        out.push_back(static_cast<int>(lo));
        z_num = target - sm.cum[lo] * z_den;
        z_den *= sm.num[lo];
    }
    return out;
}

}  // namespace coding
}  // namespace tsat
