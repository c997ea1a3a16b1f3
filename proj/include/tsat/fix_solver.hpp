#pragma once

#include <cstdint>
#include <vector>

#include "tsat/bits.hpp"
#include "tsat/cnf.hpp"
#include "tsat/random_source.hpp"

namespace tsat {
namespace sat {

// One step of the depth-first traversal of the recursion forest.
//  Root: a driver-level call; value = clause index.
//  Up:   a recursive call; value = rank of the child clause in the parent's
//        (reflexive, ascending) neighbor list.
//  Down: a return.
// Every Root and Up step is one resample; Downs carry nothing.
struct WalkStep {
    enum Kind : uint8_t { Root, Up, Down };
    Kind kind;
    int value = 0;

    bool operator==(const WalkStep& o) const = default;
};

struct ResampleTrace {
    std::vector<int> events;       // clause indices, in resample order
    std::vector<WalkStep> walk;
    Assignment final_assignment;   // values when the run stopped
    size_t bits_consumed = 0;      // everything drawn: init + resampling

    size_t resamples() const { return events.size(); }
};

struct SolveOptions {
    uint64_t max_resamples = 1000000;
    // re-checks the per-call contract (clause true on return, true clauses
    // preserved) at every return; test-build instrumentation, off by default
    bool check_postconditions = false;
};

struct SolveResult {
    bool success = false;  // false = resample budget exhausted
    Assignment assignment;
    ResampleTrace trace;
};

// Driver: draws var_count initial bits, then repairs clauses in ascending
// index order; each repair resamples the clause and recurses into any false
// neighbor (the clause itself included), neighbors in ascending order.
// Deterministic given (cnf, bit source state, options).
SolveResult solve(const Cnf& cnf, BitSource& bits, const SolveOptions& opts = {});

// Recovers, from the final assignment and the clause sequence alone, the
// exact resampling bits (n per event, in event order): walking backwards,
// the clause resampled last must have held its unique falsifying tuple just
// before, so its current values are the fresh bits and its prior values are
// forced. Returns resamples() * n bits.
std::vector<uint8_t> reconstruct_bits(const Cnf& cnf, const ResampleTrace& trace);

struct WalkCodeReport {
    uint64_t total_bits = 0;
    uint64_t resamples = 0;     // N
    uint64_t roots = 0;
    uint64_t downs = 0;
    int rank_width = 0;         // bits per Up rank = ceil(log2 max reflexive size)
    int root_width = 0;         // bits per root id  = ceil(log2 #clauses)
    bool rank_width_tight = false;  // rank_width <= n-3 (premise-regime accounting)
    // N*(n-1) + roots*root_width + 64; the emitted size never exceeds it
    // when rank_width_tight
    uint64_t bound_bits = 0;
};

struct WalkCode {
    BitVec bits;
    WalkCodeReport report;
};

// Fixed-width encoding of the walk: root ids in root_width bits; '1' + rank
// for Up; '0' for Down. Exactly invertible given the CNF.
WalkCode encode_walk(const ResampleTrace& trace, const Cnf& cnf);

// Inverse of encode_walk: rebuilds events + walk (assignment and bit counts
// are not part of the walk code).
ResampleTrace decode_walk(const BitVec& bits, const Cnf& cnf);

}  // namespace sat
}  // namespace tsat
