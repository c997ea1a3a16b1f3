#include "tsat/cnf.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace tsat {
namespace sat {

int Cnf::max_neighborhood() const {
    size_t mx = 0;
    for (const auto& nb : neighbors) mx = std::max(mx, nb.size());
    return static_cast<int>(mx);
}

void Cnf::build_neighbors() {
    std::vector<std::vector<int>> by_var(static_cast<size_t>(var_count));
    for (size_t ci = 0; ci < clauses.size(); ++ci)
        for (const auto& lit : clauses[ci].lits)
            by_var[static_cast<size_t>(lit.var)].push_back(static_cast<int>(ci));

    neighbors.assign(clauses.size(), {});
    for (size_t ci = 0; ci < clauses.size(); ++ci) {
        std::set<int> nb;
        nb.insert(static_cast<int>(ci));  // reflexive
        for (const auto& lit : clauses[ci].lits)
            for (int other : by_var[static_cast<size_t>(lit.var)]) nb.insert(other);
        neighbors[ci].assign(nb.begin(), nb.end());
    }
}

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
    throw parse_error("line " + std::to_string(line) + ": " + msg);
}

}  // namespace

Cnf parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    long header_vars = -1, header_clauses = -1;
    Cnf cnf;
    std::vector<Literal> current;
    std::set<int> current_vars;
    int clause_start_line = 0;

    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;  // blank
        if (tok[0] == 'c') continue;

        if (header_vars < 0) {
            if (tok != "p") fail(lineno, "expected 'p cnf <vars> <clauses>' header");
            std::string fmt;
            if (!(ls >> fmt) || fmt != "cnf") fail(lineno, "header format must be 'cnf'");
            if (!(ls >> header_vars >> header_clauses) || header_vars < 0 || header_clauses < 0)
                fail(lineno, "malformed header counts");
            std::string extra;
            if (ls >> extra) fail(lineno, "trailing tokens after header");
            cnf.var_count = static_cast<int>(header_vars);
            continue;
        }

        // clause data: integers, 0 terminates a clause
        ls.clear();
        ls.str(line);
        long lit;
        while (ls >> lit) {
            if (lit == 0) {
                if (current.empty()) fail(lineno, "empty clause");
                if (cnf.clauses.empty()) {
                    cnf.width = static_cast<int>(current.size());
                } else if (static_cast<int>(current.size()) != cnf.width) {
                    fail(clause_start_line, "clause has " + std::to_string(current.size()) +
                                                " literals, expected " + std::to_string(cnf.width));
                }
                cnf.clauses.push_back(Clause{current});
                current.clear();
                current_vars.clear();
                continue;
            }
            if (current.empty()) clause_start_line = lineno;
            long v = lit > 0 ? lit : -lit;
            if (v > header_vars)
                fail(lineno, "variable " + std::to_string(v) + " out of range (header declares " +
                                 std::to_string(header_vars) + ")");
            int var0 = static_cast<int>(v) - 1;
            if (!current_vars.insert(var0).second)
                fail(lineno, "repeated variable " + std::to_string(v) + " in clause");
            current.push_back(Literal{var0, lit > 0});
        }
        if (!ls.eof()) fail(lineno, "non-integer token in clause data");
    }

    if (header_vars < 0) throw parse_error("missing 'p cnf' header");
    if (!current.empty()) fail(lineno, "unterminated clause at end of input");
    if (static_cast<long>(cnf.clauses.size()) != header_clauses)
        throw parse_error("header declares " + std::to_string(header_clauses) + " clauses, found " +
                          std::to_string(cnf.clauses.size()));

    cnf.build_neighbors();
    return cnf;
}

std::string emit_dimacs(const Cnf& cnf) {
    std::ostringstream out;
    out << "p cnf " << cnf.var_count << " " << cnf.clauses.size() << "\n";
    for (const auto& c : cnf.clauses) {
        for (const auto& lit : c.lits) out << (lit.positive ? lit.var + 1 : -(lit.var + 1)) << " ";
        out << "0\n";
    }
    return out.str();
}

bool clause_true(const Clause& c, const Assignment& a) {
    for (const auto& lit : c.lits) {
        bool v = a.values[static_cast<size_t>(lit.var)] != 0;
        if (v == lit.positive) return true;
    }
    return false;
}

bool evaluate(const Cnf& cnf, const Assignment& a) {
    if (static_cast<int>(a.values.size()) != cnf.var_count)
        throw std::invalid_argument("evaluate: assignment covers " +
                                    std::to_string(a.values.size()) + " of " +
                                    std::to_string(cnf.var_count) + " variables");
    for (const auto& c : cnf.clauses)
        if (!clause_true(c, a)) return false;
    return true;
}

PremiseReport check_premise(const Cnf& cnf) {
    PremiseReport r;
    r.width = cnf.width;
    if (cnf.clauses.empty()) {
        r.vacuous = true;
        r.holds = true;
        r.bound = 1;
        return r;
    }
    int mx = 0;
    for (const auto& nb : cnf.neighbors) mx = std::max(mx, static_cast<int>(nb.size()) - 1);
    r.max_neighbors = mx;

    int n = cnf.width;
    if (n >= 3) {
        mpz_class b;
        mpz_ui_pow_ui(b.get_mpz_t(), 2, static_cast<unsigned long>(n - 3));
        r.bound = mpq_class(b);
        r.holds = mpq_class(mx) <= r.bound;
    } else {
        mpz_class d;
        mpz_ui_pow_ui(d.get_mpz_t(), 2, static_cast<unsigned long>(3 - n));
        r.bound = make_q(mpz_class(1), d);
        r.fractional_bound = true;
        r.holds = false;
    }
    return r;
}

}  // namespace sat
}  // namespace tsat
