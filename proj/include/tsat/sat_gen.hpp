#pragma once

#include <cstdint>

#include "tsat/cnf.hpp"

namespace tsat {
namespace sat {

struct GenParams {
    int var_count = 20;
    int width = 5;            // n
    int clause_target = 12;
    int max_reflexive = 4;    // cap on |neighbors incl. self|; <= 2^(n-3) keeps the premise
    uint64_t seed = 1;
};

// Random n-uniform CNF built by rejection: a candidate clause is kept only if
// every reflexive neighborhood (its own and its neighbors') stays within
// max_reflexive. Stops at clause_target or when attempts run dry, so the
// result can be smaller than asked.
Cnf generate_uniform_cnf(const GenParams& p);

}  // namespace sat
}  // namespace tsat
