#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "tsat/coding.hpp"
#include "tsat/forbidden.hpp"
#include "tsat/poly.hpp"
#include "tsat/tetris.hpp"

namespace tsat {
namespace words {

// Feasibility of sum_j a_j x^j < m x - 1 for some x > 0. The verdict is
// exact: a Sturm count of A(x) = 1 - m x + sum a_j x^j decides whether the
// convex A dips strictly below zero; floating point only steers the witness
// search, and the reported witness is re-verified in exact rationals.
struct MillerReport {
    bool holds = false;
    mpq_class witness_x;  // valid when holds; minimal-denominator point of the dip
    mpq_class margin;     // m x - 1 - sum a_j x^j at witness_x; > 0 when holds
    double c = 0.0;       // -log2(witness_x), the per-letter amortization reserve

    // diagnostic probe near the minimizer of A (always filled when A is
    // nonlinear): A's exact value there; >= 0 whenever holds is false
    mpq_class probe_x;
    mpq_class probe_value;
};

// A(x) = 1 - m x + sum_j a_j x^j as an exact polynomial.
QPoly miller_poly(const ForbiddenSet& fs);

MillerReport check_miller(const ForbiddenSet& fs);

// The arithmetic-coding model induced by a feasible witness x:
//   symbol 0            ('+')       p0       = 1/(m x)
//   symbol 1+i (string) (+<s_i>)    x^(j-1)/m   for |s_i| = j
// Strings in canonical order. Total mass < 1 exactly (by the margin).
struct RecordModel {
    coding::SymbolModel model;
    std::vector<std::string> strings;          // symbol id 1+i -> string
    std::map<std::string, int> symbol_of;      // string -> symbol id
    mpq_class x;
    mpq_class p0;
};

RecordModel record_model(const ForbiddenSet& fs, const MillerReport& report);

struct RecordCode {
    coding::CodeBits bits;
    size_t letters_drawn = 0;
    size_t final_len = 0;
    uint64_t total_bits = 0;
    double naive_bits = 0.0;  // letters_drawn * log2 m
    double saved = 0.0;       // naive_bits - total_bits
    double c = 0.0;
    // per-event-class amortization inequalities, verified in exact
    // rationals: p0 >= 1/(m x) and m p_j >= a_j x^(j-1) for every length
    // present in the model
    bool amortized_ok = false;
    // total_bits <= letters log2 m - c*final_len + kCodeSlackBits
    bool within_bound = false;
};

// Arithmetic-codes the record under record_model and checks the accounting
// that makes long non-progress a measurable compression.
RecordCode encode_record(const ForbiddenSet& fs, const Record& record,
                         const std::string& final_str, const MillerReport& report);

// Exact inverse given the same forbidden set/report and the event count.
Record decode_record(const ForbiddenSet& fs, const MillerReport& report,
                     const coding::CodeBits& bits, size_t event_count);

}  // namespace words
}  // namespace tsat
