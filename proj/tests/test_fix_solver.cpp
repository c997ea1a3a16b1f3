#include <random>

#include "doctest.h"
#include "tsat/fix_solver.hpp"
#include "tsat/sat_census.hpp"
#include "tsat/sat_gen.hpp"

using namespace tsat;
using namespace tsat::sat;

namespace {

const char* kTwoClause = "p cnf 4 2\n-1 2 4 0\n-2 3 -4 0\n";

// the forward log's resampling section: everything after the initial draw
std::vector<uint8_t> resample_section(const BitSource& bits, const Cnf& cnf,
                                      const ResampleTrace& trace) {
    size_t start = static_cast<size_t>(cnf.var_count);
    size_t len = trace.resamples() * static_cast<size_t>(cnf.width);
    REQUIRE(bits.log().size() >= start + len);
    return {bits.log().begin() + static_cast<long>(start),
            bits.log().begin() + static_cast<long>(start + len)};
}

}  // namespace

TEST_CASE("solve: zero-clause formula needs no resamples") {
    Cnf cnf = parse_dimacs("p cnf 6 0\n");
    BitSource bits(42);
    SolveResult r = solve(cnf, bits);
    CHECK(r.success);
    CHECK(r.trace.resamples() == 0);
    CHECK(r.trace.walk.empty());
    CHECK(evaluate(cnf, r.assignment));
    CHECK(r.trace.bits_consumed == 6);
}

TEST_CASE("solve: the two-clause example succeeds for 100 seeds") {
    Cnf cnf = parse_dimacs(kTwoClause);
    REQUIRE(count_satisfying_serial(cnf) == 12);
    for (uint64_t seed = 0; seed < 100; ++seed) {
        BitSource bits(seed);
        SolveOptions opts;
        opts.check_postconditions = true;
        SolveResult r = solve(cnf, bits, opts);
        REQUIRE(r.success);
        CHECK(evaluate(cnf, r.assignment));
    }
}

TEST_CASE("solve: premise-satisfying random instances succeed and verify") {
    std::mt19937_64 rng(2024);
    int solved = 0, runs = 0;
    for (int inst = 0; inst < 12; ++inst) {
        GenParams p;
        p.var_count = 12 + static_cast<int>(rng() % 4);
        p.width = 5;
        p.clause_target = 10;
        p.max_reflexive = 4;
        p.seed = rng();
        Cnf cnf = generate_uniform_cnf(p);
        REQUIRE(check_premise(cnf).holds);
        REQUIRE(count_satisfying_serial(cnf) > 0);  // the theorem, exhaustively
        for (uint64_t s = 0; s < 5; ++s) {
            ++runs;
            BitSource bits(s * 977 + 13);
            SolveResult r = solve(cnf, bits);
            if (r.success) {
                ++solved;
                CHECK(evaluate(cnf, r.assignment));
            }
        }
    }
    CHECK(solved == runs);
}

TEST_CASE("solve is deterministic in the seed") {
    Cnf cnf = parse_dimacs(kTwoClause);
    BitSource b1(7), b2(7), b3(8);
    SolveResult r1 = solve(cnf, b1), r2 = solve(cnf, b2), r3 = solve(cnf, b3);
    CHECK(r1.assignment == r2.assignment);
    CHECK(r1.trace.events == r2.trace.events);
    CHECK(r1.trace.walk == r2.trace.walk);
    CHECK(b1.log() == b2.log());
    // a different seed should (generically) differ somewhere
    CHECK(b1.log() != b3.log());
}

TEST_CASE("reconstruction: forward log recovered bit for bit") {
    std::mt19937_64 rng(555);
    int nonempty = 0;
    for (int it = 0; it < 60; ++it) {
        GenParams p;
        p.var_count = 10 + static_cast<int>(rng() % 8);
        p.width = 3 + static_cast<int>(rng() % 3);
        p.clause_target = 2 + static_cast<int>(rng() % 10);
        p.max_reflexive = 2 + static_cast<int>(rng() % 6);
        p.seed = rng();
        Cnf cnf = generate_uniform_cnf(p);
        BitSource bits(rng());
        SolveResult r = solve(cnf, bits);
        auto rec = reconstruct_bits(cnf, r.trace);
        CHECK(rec == resample_section(bits, cnf, r.trace));
        if (!rec.empty()) ++nonempty;
    }
    CHECK(nonempty > 10);  // the check must not be vacuous
}

TEST_CASE("reconstruction: exhausted runs reconstruct their partial trace") {
    // unsatisfiable core: all 8 sign patterns on 3 variables
    std::string text = "p cnf 3 8\n";
    for (int bits = 0; bits < 8; ++bits) {
        for (int v = 0; v < 3; ++v)
            text += ((bits >> v) & 1 ? "-" : "") + std::to_string(v + 1) + " ";
        text += "0\n";
    }
    Cnf cnf = parse_dimacs(text);
    for (uint64_t seed = 0; seed < 20; ++seed) {
        BitSource bits(seed);
        SolveOptions opts;
        opts.max_resamples = 50;
        SolveResult r = solve(cnf, bits, opts);
        CHECK(!r.success);
        CHECK(r.trace.resamples() == 50);
        CHECK(reconstruct_bits(cnf, r.trace) == resample_section(bits, cnf, r.trace));
    }
}

TEST_CASE("reconstruction: N = 0 gives the empty bit sequence") {
    Cnf cnf = parse_dimacs("p cnf 4 0\n");
    BitSource bits(1);
    SolveResult r = solve(cnf, bits);
    CHECK(reconstruct_bits(cnf, r.trace).empty());
}

TEST_CASE("reconstruction: corrupted trace raises an integrity error") {
    Cnf cnf = parse_dimacs(kTwoClause);
    BitSource bits(3);
    SolveResult r = solve(cnf, bits);
    ResampleTrace bad = r.trace;
    bad.events.push_back(99);
    CHECK_THROWS_AS(reconstruct_bits(cnf, bad), integrity_error);
    ResampleTrace bad2 = r.trace;
    bad2.final_assignment.values.pop_back();
    CHECK_THROWS_AS(reconstruct_bits(cnf, bad2), integrity_error);
}

TEST_CASE("walk code: round trip and accounting on random runs") {
    std::mt19937_64 rng(31337);
    for (int it = 0; it < 50; ++it) {
        GenParams p;
        p.var_count = 10 + static_cast<int>(rng() % 10);
        p.width = 4 + static_cast<int>(rng() % 3);
        p.clause_target = 3 + static_cast<int>(rng() % 10);
        p.max_reflexive = 1 << (p.width - 3);  // premise-tight
        p.seed = rng();
        Cnf cnf = generate_uniform_cnf(p);
        BitSource bits(rng());
        SolveResult r = solve(cnf, bits);

        WalkCode wc = encode_walk(r.trace, cnf);
        CHECK(wc.report.total_bits == wc.bits.size());
        CHECK(wc.report.resamples == r.trace.resamples());
        CHECK(wc.report.rank_width_tight);
        CHECK(wc.report.total_bits <= wc.report.bound_bits);

        ResampleTrace back = decode_walk(wc.bits, cnf);
        CHECK(back.events == r.trace.events);
        CHECK(back.walk == r.trace.walk);
    }
}

TEST_CASE("walk code: single resample costs about n-1 bits plus the root id") {
    // one clause over three variables; pick a seed whose first three bits
    // falsify it so exactly one root repair happens
    Cnf cnf = parse_dimacs("p cnf 3 1\n1 2 3 0\n");
    for (uint64_t seed = 0;; ++seed) {
        REQUIRE(seed < 1000);
        BitSource bits(seed);
        SolveResult r = solve(cnf, bits);
        REQUIRE(r.success);
        if (r.trace.resamples() != 1) continue;
        WalkCode wc = encode_walk(r.trace, cnf);
        // root id is free (single clause), n-3 = 0 rank bits, one down bit
        CHECK(wc.report.roots == 1);
        CHECK(wc.report.total_bits <= static_cast<uint64_t>(cnf.width - 1) +
                                          static_cast<uint64_t>(wc.report.root_width) + 2);
        break;
    }
}

TEST_CASE("walk code: exhausted runs still round trip") {
    std::string text = "p cnf 3 8\n";
    for (int bits = 0; bits < 8; ++bits) {
        for (int v = 0; v < 3; ++v)
            text += ((bits >> v) & 1 ? "-" : "") + std::to_string(v + 1) + " ";
        text += "0\n";
    }
    Cnf cnf = parse_dimacs(text);
    BitSource bits(11);
    SolveOptions opts;
    opts.max_resamples = 37;
    SolveResult r = solve(cnf, bits, opts);
    REQUIRE(!r.success);
    WalkCode wc = encode_walk(r.trace, cnf);
    ResampleTrace back = decode_walk(wc.bits, cnf);
    CHECK(back.events == r.trace.events);
    CHECK(back.walk == r.trace.walk);
}

TEST_CASE("walk code: inconsistent traces are refused") {
    Cnf cnf = parse_dimacs(kTwoClause);
    BitSource bits(3);
    SolveResult r = solve(cnf, bits);
    ResampleTrace bad = r.trace;
    bad.walk.push_back(WalkStep{WalkStep::Up, 5});  // rank overflow
    CHECK_THROWS_AS(encode_walk(bad, cnf), integrity_error);
}

TEST_CASE("instrumented postconditions hold across seeds") {
    std::mt19937_64 rng(808);
    for (int it = 0; it < 15; ++it) {
        GenParams p;
        p.var_count = 10;
        p.width = 4;
        p.clause_target = 8;
        p.max_reflexive = 2 + static_cast<int>(rng() % 4);
        p.seed = rng();
        Cnf cnf = generate_uniform_cnf(p);
        BitSource bits(rng());
        SolveOptions opts;
        opts.check_postconditions = true;
        SolveResult r = solve(cnf, bits, opts);  // throws on violation
        if (r.success) CHECK(evaluate(cnf, r.assignment));
    }
}
