#pragma once

#include <gmpxx.h>

#include <vector>

#include "tsat/forbidden.hpp"

namespace tsat {
namespace words {

// Exact counts s_0..s_n of factor-free strings per length.
//
// Two independent routes:
//  * enumeration — depth-first walk of the (prefix-closed) tree of
//    factor-free strings, pruning on forbidden suffixes by direct string
//    comparison; guarded at m^n <= 10^8. OpenMP splits the tree at a shallow
//    depth; the serial walk is the reference oracle.
//  * suffix-state dynamic programming — Aho-Corasick-style states (longest
//    suffix that is a proper prefix of a forbidden string); handles any n,
//    big-integer counts.
inline constexpr double kEnumGuard = 1e8;

std::vector<mpz_class> count_allowed_enum_serial(const ForbiddenSet& fs, int n_max);
std::vector<mpz_class> count_allowed_enum(const ForbiddenSet& fs, int n_max);  // OpenMP
std::vector<mpz_class> count_allowed_dp(const ForbiddenSet& fs, int n_max);

enum class CountMethod { Auto, Enumerate, SuffixDp };

// Auto takes the enumeration route under the guard, DP above it.
// Explicit Enumerate past the guard raises guard_error suggesting a smaller
// n_max (or the DP route).
std::vector<mpz_class> count_allowed(const ForbiddenSet& fs, int n_max,
                                     CountMethod method = CountMethod::Auto);

}  // namespace words
}  // namespace tsat
