#include "tsat/sat_census.hpp"

#include <vector>

namespace tsat {
namespace sat {

namespace {

struct PackedClause {
    uint32_t mask = 0;  // variables of the clause
    uint32_t bad = 0;   // the unique falsifying pattern on those variables
};

// clause is false under `a` iff (a & mask) == bad
std::vector<PackedClause> pack(const Cnf& cnf) {
    std::vector<PackedClause> out;
    out.reserve(cnf.clauses.size());
    for (const auto& c : cnf.clauses) {
        PackedClause pc;
        for (const auto& lit : c.lits) {
            pc.mask |= 1u << lit.var;
            if (!lit.positive) pc.bad |= 1u << lit.var;  // negated literal false when var=1
        }
        out.push_back(pc);
    }
    return out;
}

void guard(const Cnf& cnf) {
    if (cnf.var_count > kCensusMaxVars)
        throw guard_error("sat census: " + std::to_string(cnf.var_count) + " variables exceed 2^" +
                          std::to_string(kCensusMaxVars) + " scan guard");
}

inline bool satisfied(const std::vector<PackedClause>& cs, uint32_t a) {
    for (const auto& pc : cs)
        if ((a & pc.mask) == pc.bad) return false;
    return true;
}

}  // namespace

uint64_t count_satisfying_serial(const Cnf& cnf) {
    guard(cnf);
    auto cs = pack(cnf);
    const uint64_t total = 1ull << cnf.var_count;
    uint64_t count = 0;
    for (uint64_t a = 0; a < total; ++a)
        if (satisfied(cs, static_cast<uint32_t>(a))) ++count;
    return count;
}

uint64_t count_satisfying(const Cnf& cnf) {
    guard(cnf);
    auto cs = pack(cnf);
    const int64_t total = 1ll << cnf.var_count;
    uint64_t count = 0;
#pragma omp parallel for reduction(+ : count) schedule(static)
    for (int64_t a = 0; a < total; ++a)
        if (satisfied(cs, static_cast<uint32_t>(a))) ++count;
    return count;
}

}  // namespace sat
}  // namespace tsat
