#pragma once

#include <gmpxx.h>

#include <vector>

#include "tsat/bits.hpp"
#include "tsat/coding.hpp"

namespace tsat {
namespace toy {

struct CyclicWitness {
    int k = 0;          // shift in 1..n-1
    long distance = 0;  // Hamming distance between x and its k-rotation
};

long shift_distance(const std::vector<uint8_t>& x, int k);

// the shift minimizing the distance (smallest k on ties); |x| >= 2
CyclicWitness min_shift_distance(const std::vector<uint8_t>& x);

struct RotationCode {
    BitVec bits;
    int k = 0;               // shift actually encoded (normalized to <= n/2)
    size_t header_bits = 0;  // ceil(log2 n) + k
    size_t payload_bits = 0; // entropy-coded xor stream
    double bound_bits = 0;   // ceil(log2 n) + k + (n-k) H(2 eps) + slack
    bool within_bound = false;
};

// Three-part description of a nearly shift-invariant string: the shift k,
// the first k bits raw, then x_{k+i} xor x_i entropy-coded under a
// Bernoulli(2 eps) model. Requires w.distance < eps*n (error otherwise) and
// 0 < eps < 1/2.
RotationCode compress_rotation(const std::vector<uint8_t>& x, const CyclicWitness& w,
                               const mpq_class& eps);

std::vector<uint8_t> decompress_rotation(const BitVec& bits, int n, const mpq_class& eps);

}  // namespace toy
}  // namespace tsat
