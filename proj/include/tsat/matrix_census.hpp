#pragma once

#include <gmpxx.h>

#include <cstdint>

namespace tsat {
namespace toy {

// Exhaustive scan of all 2^(n*n) Boolean matrices, counting those with at
// least one monochromatic k×k minor; guarded at n*n <= 25. The union bound
// n^(2k) * 2^(n^2 - k^2 + 1) always dominates the exact count.
struct BadMatrixCensus {
    uint64_t exact_count = 0;
    uint64_t total = 0;  // 2^(n^2)
    mpz_class union_bound;
};

BadMatrixCensus count_bad_matrices(int n, int k);         // OpenMP
uint64_t count_bad_matrices_serial(int n, int k);         // reference count

mpz_class bad_matrix_union_bound(int n, int k);

}  // namespace toy
}  // namespace tsat
