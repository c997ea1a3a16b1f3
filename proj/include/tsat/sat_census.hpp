#pragma once

#include <cstdint>

#include "tsat/cnf.hpp"

namespace tsat {
namespace sat {

// Exhaustive scan over all 2^var_count assignments. Used as the independent
// satisfiability oracle; var_count is capped at 25. The OpenMP kernel is the
// production path, the serial one is the reference the tests compare it to.
inline constexpr int kCensusMaxVars = 25;

uint64_t count_satisfying(const Cnf& cnf);         // OpenMP
uint64_t count_satisfying_serial(const Cnf& cnf);  // reference

}  // namespace sat
}  // namespace tsat
