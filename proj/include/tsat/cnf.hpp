#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "tsat/rational.hpp"

namespace tsat {
namespace sat {

struct Literal {
    int var = 0;       // 0-based variable index
    bool positive = true;

    bool operator==(const Literal& o) const = default;
};

// n literals over n distinct variables; exactly one assignment of those
// variables falsifies it.
struct Clause {
    std::vector<Literal> lits;

    bool operator==(const Clause& o) const = default;
};

struct Assignment {
    std::vector<uint8_t> values;  // one bit per variable

    bool operator==(const Assignment& o) const = default;
    std::string str() const {
        std::string s;
        s.reserve(values.size());
        for (uint8_t v : values) s.push_back(v ? '1' : '0');
        return s;
    }
};

// n-uniform CNF with its neighbor structure. The neighbor lists are
// reflexive (a clause is its own neighbor): that is the list the resampling
// loop iterates over.
struct Cnf {
    int var_count = 0;
    int width = 0;  // literals per clause; 0 for the empty formula
    std::vector<Clause> clauses;
    std::vector<std::vector<int>> neighbors;  // sorted, self included

    size_t clause_count() const { return clauses.size(); }

    // largest reflexive neighborhood over all clauses (0 for empty formula)
    int max_neighborhood() const;

    void build_neighbors();
};

// DIMACS-CNF subset: optional `c` comment lines, one `p cnf V C` header,
// then C clauses as nonzero integers terminated by 0 (clauses may span
// lines). Errors name the offending line.
Cnf parse_dimacs(const std::string& text);

std::string emit_dimacs(const Cnf& cnf);

bool clause_true(const Clause& c, const Assignment& a);

// true iff every clause has at least one true literal
bool evaluate(const Cnf& cnf, const Assignment& a);

struct PremiseReport {
    int width = 0;             // n
    int max_neighbors = 0;     // excluding the clause itself (see below)
    mpq_class bound;           // 2^(n-3), exact (fractional when n < 3)
    bool holds = false;
    bool vacuous = false;          // zero clauses
    bool fractional_bound = false; // n < 3: bound below 1, reported not-held
    // Convention: max_neighbors counts neighbors EXCLUDING the clause
    // itself; the solver's iteration list includes it. Recorded here so the
    // report is auditable against either convention.
    static constexpr const char* kConvention = "neighbor counts exclude the clause itself";
};

PremiseReport check_premise(const Cnf& cnf);

}  // namespace sat
}  // namespace tsat
