#include "tsat/miller.hpp"

#include <cmath>

namespace tsat {
namespace words {

QPoly miller_poly(const ForbiddenSet& fs) {
    std::vector<mpq_class> c(static_cast<size_t>(std::max(fs.max_length() + 1, 2)), mpq_class(0));
    c[0] = 1;
    c[1] = -fs.m;
    for (const auto& [j, set] : fs.by_length) c[static_cast<size_t>(j)] = static_cast<long>(set.size());
    return QPoly(std::move(c));
}

MillerReport check_miller(const ForbiddenSet& fs) {
    MillerReport rep;
    QPoly A = miller_poly(fs);

    if (A.degree() <= 1) {
        // no forbidden strings at all: 0 < m x - 1 for any x > 1/m
        rep.holds = true;
        rep.witness_x = 1;
        rep.margin = -A.eval(1);  // m - 1
        rep.c = 0.0;
        rep.probe_x = 1;
        rep.probe_value = A.eval(1);
        return rep;
    }

    QPoly dA = A.derivative();
    mpq_class start_hi(std::max(1, fs.max_length()));
    rep.probe_x = convex_minimizer_probe(dA, start_hi);
    rep.probe_value = A.eval(rep.probe_x);

    // A is convex with A(0) = 1 > 0: a strictly negative dip exists iff A
    // has two distinct positive roots (one would be a tangency, min = 0).
    int roots = count_distinct_positive_roots(A);
    if (roots < 2) {
        rep.holds = false;
        return rep;
    }

    // anchor a point with A < 0, exactly verified
    mpq_class anchor = rep.probe_x;
    if (A.eval(anchor) >= 0) {
        // dip narrower than the probe's bracket: tighten along A' toward
        // the true minimizer, which the dip contains
        mpq_class alo = 0, ahi = start_hi;
        int guard = 0;
        while (dA.eval(ahi) < 0) {
            alo = ahi;
            ahi *= 2;
            if (++guard > 300) throw integrity_error("miller: minimizer escaped the search cap");
        }
        guard = 0;
        while (A.eval(anchor) >= 0) {
            mpq_class mid = (alo + ahi) / 2;
            int s = sgn(dA.eval(mid));
            if (s < 0)
                alo = mid;
            else
                ahi = mid;
            anchor = s == 0 ? mid : (alo + ahi) / 2;
            if (++guard > 3000)
                throw integrity_error("miller: could not verify a dip point exactly");
        }
    }

    // widen to (almost) the whole dip, endpoints verified negative
    mpq_class lo0 = 0, lo1 = anchor;  // A(lo0) > 0, A(lo1) < 0
    for (int i = 0; i < 80; ++i) {
        mpq_class mid = (lo0 + lo1) / 2;
        if (A.eval(mid) < 0)
            lo1 = mid;
        else
            lo0 = mid;
    }
    mpq_class hi1 = anchor, hi0 = std::max(mpq_class(2 * anchor), start_hi);
    int guard = 0;
    while (A.eval(hi0) < 0) {
        hi0 *= 2;
        if (++guard > 200) throw integrity_error("miller: dip unbounded above");
    }
    for (int i = 0; i < 80; ++i) {
        mpq_class mid = (hi1 + hi0) / 2;
        if (A.eval(mid) < 0)
            hi1 = mid;
        else
            hi0 = mid;
    }

    // minimal-denominator witness across the verified-negative span
    rep.witness_x = (lo1 < hi1) ? simplest_in_interval(lo1, hi1) : lo1;
    rep.margin = -A.eval(rep.witness_x);
    if (rep.margin <= 0) throw integrity_error("miller: witness failed exact re-verification");
    rep.holds = true;
    rep.c = -std::log2(to_double(rep.witness_x));
    return rep;
}

RecordModel record_model(const ForbiddenSet& fs, const MillerReport& report) {
    if (!report.holds)
        throw std::invalid_argument("record_model: no model without a feasible witness");
    RecordModel rm;
    rm.x = report.witness_x;
    rm.p0 = 1 / (mpq_class(fs.m) * rm.x);
    rm.model.probs.push_back(rm.p0);
    rm.strings = fs.ordered();
    for (size_t i = 0; i < rm.strings.size(); ++i) {
        const std::string& s = rm.strings[i];
        // x^(j-1) / m, the a_j-way split of p_j = a_j x^j / (m x)
        mpq_class p = 1;
        for (size_t k = 0; k + 1 < s.size(); ++k) p *= rm.x;
        p /= fs.m;
        rm.model.probs.push_back(p);
        rm.symbol_of[s] = static_cast<int>(i) + 1;
    }
    rm.model.validate();
    mpq_class total = 0;
    for (const auto& q : rm.model.probs) total += q;
    if (!(total < 1))
        throw integrity_error("record_model: mass not strictly below 1 despite margin");
    return rm;
}

RecordCode encode_record(const ForbiddenSet& fs, const Record& record,
                         const std::string& final_str, const MillerReport& report) {
    RecordModel rm = record_model(fs, report);

    std::vector<int> symbols;
    symbols.reserve(record.events.size());
    for (const auto& ev : record.events) {
        if (!ev.deleted) {
            symbols.push_back(0);
        } else {
            auto it = rm.symbol_of.find(ev.erased);
            if (it == rm.symbol_of.end())
                throw std::invalid_argument("encode_record: record names unknown string '" +
                                            ev.erased + "'");
            symbols.push_back(it->second);
        }
    }

    RecordCode rc;
    rc.bits = coding::encode(rm.model, symbols);
    rc.letters_drawn = record.events.size();
    rc.final_len = final_str.size();
    rc.total_bits = rc.bits.length();
    rc.naive_bits = static_cast<double>(rc.letters_drawn) * std::log2(static_cast<double>(fs.m));
    rc.saved = rc.naive_bits - static_cast<double>(rc.total_bits);
    rc.c = report.c;

    // exact amortization checks (log-free forms of the per-event bounds):
    //   log(1/p0) <= log m - c        <=>  p0 * m * x >= 1
    //   log(1/pj) + log aj <= log m + c(j-1)  <=>  m * (pj/aj) >= x^(j-1)
    bool ok = rm.p0 * fs.m * rm.x >= 1;
    for (const auto& [j, set] : fs.by_length) {
        if (set.empty()) continue;
        mpq_class per_string = 1;
        for (int k = 0; k + 1 < j; ++k) per_string *= rm.x;  // x^(j-1)
        // model prob for each length-j string is x^(j-1)/m by construction
        mpq_class prob = rm.model.probs[static_cast<size_t>(rm.symbol_of.at(*set.begin()))];
        if (!(mpq_class(fs.m) * prob >= per_string)) ok = false;
    }
    rc.amortized_ok = ok;

    double bound = rc.naive_bits - rc.c * static_cast<double>(rc.final_len) +
                   coding::kCodeSlackBits;
    rc.within_bound = static_cast<double>(rc.total_bits) <= bound;
    return rc;
}

Record decode_record(const ForbiddenSet& fs, const MillerReport& report,
                     const coding::CodeBits& bits, size_t event_count) {
    RecordModel rm = record_model(fs, report);
    std::vector<int> symbols = coding::decode(rm.model, bits, event_count);
    Record rec;
    rec.events.reserve(symbols.size());
    for (int s : symbols) {
        if (s == 0)
            rec.events.push_back(RecordEvent{false, {}});
        else
            rec.events.push_back(RecordEvent{true, rm.strings[static_cast<size_t>(s - 1)]});
    }
    return rec;
}

}  // namespace words
}  // namespace tsat
