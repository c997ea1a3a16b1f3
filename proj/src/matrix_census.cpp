#include "tsat/matrix_census.hpp"

#include <bit>
#include <vector>

#include "tsat/rational.hpp"

namespace tsat {
namespace toy {

namespace {

void census_guard(int n, int k) {
    if (n < 1 || k < 1 || k > n) throw std::invalid_argument("matrix census: need 1 <= k <= n");
    if (n * n > 25) throw guard_error("matrix census: 2^(n^2) scan guarded at n^2 <= 25");
}

std::vector<std::vector<int>> row_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> comb(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) comb[static_cast<size_t>(i)] = i;
    for (;;) {
        out.push_back(comb);
        int i = k - 1;
        while (i >= 0 && comb[static_cast<size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++comb[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            comb[static_cast<size_t>(j)] = comb[static_cast<size_t>(j - 1)] + 1;
    }
    return out;
}

// matrix packed into code: row r occupies bits [r*n, r*n + n)
inline bool has_minor(uint32_t code, int n, int k,
                      const std::vector<std::vector<int>>& subsets) {
    const uint32_t colmask = (1u << n) - 1;
    for (const auto& rows : subsets) {
        uint32_t ones = colmask, zeros = colmask;
        for (int r : rows) {
            uint32_t row = (code >> (r * n)) & colmask;
            ones &= row;
            zeros &= ~row & colmask;
        }
        if (std::popcount(ones) >= k || std::popcount(zeros) >= k) return true;
    }
    return false;
}

}  // namespace

mpz_class bad_matrix_union_bound(int n, int k) {
    mpz_class b;
    mpz_ui_pow_ui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(2 * k));
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(n * n - k * k + 1));
    return b * p;
}

uint64_t count_bad_matrices_serial(int n, int k) {
    census_guard(n, k);
    auto subsets = row_subsets(n, k);
    const uint64_t total = 1ull << (n * n);
    uint64_t bad = 0;
    for (uint64_t code = 0; code < total; ++code)
        if (has_minor(static_cast<uint32_t>(code), n, k, subsets)) ++bad;
    return bad;
}

BadMatrixCensus count_bad_matrices(int n, int k) {
    census_guard(n, k);
    auto subsets = row_subsets(n, k);
    BadMatrixCensus out;
    out.total = 1ull << (n * n);
    out.union_bound = bad_matrix_union_bound(n, k);

    const int64_t total = static_cast<int64_t>(out.total);
    uint64_t bad = 0;
#pragma omp parallel for reduction(+ : bad) schedule(static)
    for (int64_t code = 0; code < total; ++code)
        if (has_minor(static_cast<uint32_t>(code), n, k, subsets)) ++bad;
    out.exact_count = bad;
    return out;
}

}  // namespace toy
}  // namespace tsat
