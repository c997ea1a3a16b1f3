#include "tsat/sat_gen.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace tsat {
namespace sat {

Cnf generate_uniform_cnf(const GenParams& p) {
    if (p.width < 1 || p.var_count < p.width)
        throw std::invalid_argument("generate_uniform_cnf: need var_count >= width >= 1");
    std::mt19937_64 rng(p.seed);

    Cnf cnf;
    cnf.var_count = p.var_count;
    cnf.width = p.width;

    std::vector<std::vector<int>> by_var(static_cast<size_t>(p.var_count));
    std::vector<int> reflexive;  // current reflexive neighborhood size per clause
    std::vector<int> vars(static_cast<size_t>(p.var_count));
    std::iota(vars.begin(), vars.end(), 0);
    std::set<std::vector<int>> seen;  // sorted vars + polarity pattern, dedup

    long attempts = 0;
    const long max_attempts = 2000l * p.clause_target + 2000;
    while (static_cast<int>(cnf.clauses.size()) < p.clause_target && attempts < max_attempts) {
        ++attempts;
        // sample n distinct variables
        for (int i = 0; i < p.width; ++i) {
            std::uniform_int_distribution<int> d(i, p.var_count - 1);
            std::swap(vars[static_cast<size_t>(i)], vars[static_cast<size_t>(d(rng))]);
        }
        std::vector<int> chosen(vars.begin(), vars.begin() + p.width);
        std::sort(chosen.begin(), chosen.end());
        uint64_t pol = rng();

        std::vector<int> key = chosen;
        for (int i = 0; i < p.width; ++i) key.push_back(static_cast<int>((pol >> i) & 1));
        if (!seen.count(key)) {
            // who would the new clause neighbor?
            std::set<int> sharers;
            for (int v : chosen)
                for (int ci : by_var[static_cast<size_t>(v)]) sharers.insert(ci);
            bool ok = static_cast<int>(sharers.size()) + 1 <= p.max_reflexive;
            if (ok)
                for (int ci : sharers)
                    if (reflexive[static_cast<size_t>(ci)] + 1 > p.max_reflexive) {
                        ok = false;
                        break;
                    }
            if (ok) {
                Clause c;
                for (int i = 0; i < p.width; ++i)
                    c.lits.push_back(Literal{chosen[static_cast<size_t>(i)],
                                             ((pol >> i) & 1) != 0});
                int idx = static_cast<int>(cnf.clauses.size());
                cnf.clauses.push_back(c);
                reflexive.push_back(static_cast<int>(sharers.size()) + 1);
                for (int ci : sharers) ++reflexive[static_cast<size_t>(ci)];
                for (int v : chosen) by_var[static_cast<size_t>(v)].push_back(idx);
                seen.insert(key);
            }
        }
    }

    cnf.build_neighbors();
    return cnf;
}

}  // namespace sat
}  // namespace tsat
