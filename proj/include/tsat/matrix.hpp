#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tsat/bits.hpp"

namespace tsat {
namespace toy {

struct BitMatrix {
    int n = 0;
    std::vector<uint8_t> bits;  // row-major, n*n

    BitMatrix() = default;
    explicit BitMatrix(int side) : n(side), bits(static_cast<size_t>(side) * side, 0) {}

    uint8_t at(int r, int c) const { return bits[static_cast<size_t>(r) * n + c]; }
    void set(int r, int c, int v) { bits[static_cast<size_t>(r) * n + c] = v ? 1 : 0; }

    bool operator==(const BitMatrix& o) const = default;

    // n lines of n characters in {0,1}
    static BitMatrix parse(const std::string& text);
    std::string str() const;
};

// k row indices + k column indices (both ascending) whose intersection is
// constant = color.
struct MinorWitness {
    std::vector<int> rows;
    std::vector<int> cols;
    int color = 0;

    bool operator==(const MinorWitness& o) const = default;
};

bool witness_valid(const BitMatrix& M, const MinorWitness& w, int k);

// Exhaustive search, lexicographically smallest witness (rows, then cols,
// then color 0 before 1); none iff no monochromatic k×k minor exists.
// Guarded at C(n,k)^2 <= 10^8 subset pairs.
std::optional<MinorWitness> find_monochromatic_minor(const BitMatrix& M, int k);

// exact encoded size: 2k ceil(log2 n) + 1 + n^2 - k^2
long minor_code_length(int n, int k);

// [2k index fields][1 color bit][the n^2-k^2 cells outside the minor,
// row-major]. Exact inverse pair; the emitted length equals
// minor_code_length(n, k) always.
BitVec compress_minor(const BitMatrix& M, const MinorWitness& w, int k);
BitMatrix decompress_minor(const BitVec& bits, int n, int k);

}  // namespace toy
}  // namespace tsat
