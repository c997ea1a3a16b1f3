#pragma once

#include <gmpxx.h>

#include <vector>

#include "tsat/bits.hpp"
#include "tsat/rational.hpp"

namespace tsat {
namespace coding {

// Fixed extra bits the coder may spend beyond the ideal information content
// of a message. The implementation's true overhead is at most 2 bits; 16 is
// the documented public bound.
inline constexpr int kCodeSlackBits = 16;

// Probabilities q_0..q_{M-1}, exact positive rationals with sum <= 1.
// Strict slack (sum < 1) is allowed: the leftover mass maps to no symbol and
// the encoder never emits into it.
struct SymbolModel {
    std::vector<mpq_class> probs;

    size_t size() const { return probs.size(); }
    void validate() const;
};

struct CodeBits {
    BitVec bits;
    size_t length() const { return bits.size(); }
};

// H(p) = p log2(1/p) + (1-p) log2(1/(1-p)), with 0 log(1/0) = 0.
// Throws std::domain_error outside [0,1].
double binary_entropy(const mpq_class& p);

// Arithmetic coding with exact rational interval arithmetic: the message
// (s_1..s_T) owns a subinterval of [0,1) of width prod q_{s_i}; the code is
// the shortest-ish binary fraction inside it. Encoded length is at most
// ceil(sum -log2 q_{s_i}) + 1 bits.
CodeBits encode(const SymbolModel& model, const std::vector<int>& symbols);

// Exact inverse of encode for the same model and symbol count. Corrupt input
// is detected best-effort: a code point landing in the model's dead mass (or
// past it) throws parse_error.
std::vector<int> decode(const SymbolModel& model, const CodeBits& code, size_t count);

// ceil(sum_i -log2 q_{s_i}) — the ideal information content, exact.
long ideal_bits(const SymbolModel& model, const std::vector<int>& symbols);

}  // namespace coding
}  // namespace tsat
