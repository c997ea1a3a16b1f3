#include "tsat/fix_solver.hpp"

#include <algorithm>

namespace tsat {
namespace sat {

namespace {

bool clause_false(const Cnf& cnf, const Assignment& a, int ci) {
    return !clause_true(cnf.clauses[static_cast<size_t>(ci)], a);
}

std::vector<uint8_t> true_set(const Cnf& cnf, const Assignment& a) {
    std::vector<uint8_t> t(cnf.clauses.size());
    for (size_t i = 0; i < cnf.clauses.size(); ++i)
        t[i] = clause_true(cnf.clauses[i], a) ? 1 : 0;
    return t;
}

void resample(const Cnf& cnf, Assignment& a, BitSource& bits, int ci, ResampleTrace& trace) {
    for (const auto& lit : cnf.clauses[static_cast<size_t>(ci)].lits)
        a.values[static_cast<size_t>(lit.var)] = static_cast<uint8_t>(bits.next_bit());
    trace.events.push_back(ci);
}

struct Frame {
    int clause;
    size_t next_neighbor;
    std::vector<uint8_t> entry_true;  // truth snapshot at call entry (instrumented runs)
};

}  // namespace

SolveResult solve(const Cnf& cnf, BitSource& bits, const SolveOptions& opts) {
    SolveResult res;
    const size_t bits_at_entry = bits.consumed();

    Assignment a;
    a.values.resize(static_cast<size_t>(cnf.var_count));
    for (auto& v : a.values) v = static_cast<uint8_t>(bits.next_bit());

    ResampleTrace& trace = res.trace;
    const uint64_t budget = opts.max_resamples;
    const bool instrument = opts.check_postconditions;
    bool exhausted = false;

    std::vector<Frame> stack;
    for (int root = 0; root < static_cast<int>(cnf.clauses.size()) && !exhausted; ++root) {
        if (!clause_false(cnf, a, root)) continue;
        if (trace.resamples() >= budget) {
            exhausted = true;
            break;
        }
        Frame frame{root, 0, instrument ? true_set(cnf, a) : std::vector<uint8_t>{}};
        trace.walk.push_back(WalkStep{WalkStep::Root, root});
        resample(cnf, a, bits, root, trace);
        stack.push_back(std::move(frame));

        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto& nbs = cnf.neighbors[static_cast<size_t>(f.clause)];
            if (f.next_neighbor == nbs.size()) {
                if (instrument) {
                    if (clause_false(cnf, a, f.clause))
                        throw integrity_error("fix postcondition: clause " +
                                              std::to_string(f.clause) + " false on return");
                    auto now = true_set(cnf, a);
                    for (size_t i = 0; i < now.size(); ++i)
                        if (f.entry_true[i] && !now[i])
                            throw integrity_error("fix postcondition: clause " +
                                                  std::to_string(i) + " was true, now false");
                }
                trace.walk.push_back(WalkStep{WalkStep::Down, 0});
                stack.pop_back();
                continue;
            }
            size_t rank = f.next_neighbor++;
            int child = nbs[rank];
            if (!clause_false(cnf, a, child)) continue;
            if (trace.resamples() >= budget) {
                exhausted = true;
                break;
            }
            Frame child_frame{child, 0, instrument ? true_set(cnf, a) : std::vector<uint8_t>{}};
            trace.walk.push_back(WalkStep{WalkStep::Up, static_cast<int>(rank)});
            resample(cnf, a, bits, child, trace);
            stack.push_back(std::move(child_frame));
        }
    }

    trace.final_assignment = a;
    trace.bits_consumed = bits.consumed() - bits_at_entry;
    res.assignment = a;
    res.success = !exhausted;
    return res;
}

std::vector<uint8_t> reconstruct_bits(const Cnf& cnf, const ResampleTrace& trace) {
    const size_t n = static_cast<size_t>(cnf.width);
    const size_t N = trace.events.size();
    if (trace.final_assignment.values.size() != static_cast<size_t>(cnf.var_count))
        throw integrity_error("reconstruct_bits: assignment length mismatch");

    Assignment a = trace.final_assignment;
    std::vector<uint8_t> bits(N * n);
    for (size_t i = N; i-- > 0;) {
        int ci = trace.events[i];
        if (ci < 0 || static_cast<size_t>(ci) >= cnf.clauses.size())
            throw integrity_error("reconstruct_bits: clause index out of range in trace");
        const Clause& c = cnf.clauses[static_cast<size_t>(ci)];
        // current values of the clause's variables are the bits this
        // resample drew
        for (size_t j = 0; j < n; ++j)
            bits[i * n + j] = a.values[static_cast<size_t>(c.lits[j].var)];
        // before the resample the clause was false: force its unique
        // falsifying tuple
        for (const auto& lit : c.lits)
            a.values[static_cast<size_t>(lit.var)] = lit.positive ? 0 : 1;
    }
    return bits;
}

WalkCode encode_walk(const ResampleTrace& trace, const Cnf& cnf) {
    WalkCode out;
    WalkCodeReport& rep = out.report;
    rep.root_width = bits_for_count(cnf.clause_count());
    rep.rank_width = bits_for_count(static_cast<uint64_t>(std::max(cnf.max_neighborhood(), 1)));
    const int n = cnf.width;
    rep.rank_width_tight = n >= 3 && rep.rank_width <= n - 3;

    std::vector<int> stack;
    size_t event_at = 0;
    for (size_t si = 0; si < trace.walk.size(); ++si) {
        const WalkStep& s = trace.walk[si];
        switch (s.kind) {
            case WalkStep::Root: {
                if (!stack.empty())
                    throw integrity_error("encode_walk: root step at depth > 0 (step " +
                                          std::to_string(si) + ")");
                out.bits.push_uint(static_cast<uint64_t>(s.value), rep.root_width);
                stack.push_back(s.value);
                ++rep.roots;
                ++rep.resamples;
                if (event_at >= trace.events.size() || trace.events[event_at++] != s.value)
                    throw integrity_error("encode_walk: walk/events mismatch at root step " +
                                          std::to_string(si));
                break;
            }
            case WalkStep::Up: {
                if (stack.empty())
                    throw integrity_error("encode_walk: up step with empty stack (step " +
                                          std::to_string(si) + ")");
                const auto& nbs = cnf.neighbors[static_cast<size_t>(stack.back())];
                if (s.value < 0 || static_cast<size_t>(s.value) >= nbs.size())
                    throw integrity_error("encode_walk: neighbor rank overflow at step " +
                                          std::to_string(si));
                out.bits.push(1);
                out.bits.push_uint(static_cast<uint64_t>(s.value), rep.rank_width);
                int child = nbs[static_cast<size_t>(s.value)];
                stack.push_back(child);
                ++rep.resamples;
                if (event_at >= trace.events.size() || trace.events[event_at++] != child)
                    throw integrity_error("encode_walk: walk/events mismatch at up step " +
                                          std::to_string(si));
                break;
            }
            case WalkStep::Down: {
                if (stack.empty())
                    throw integrity_error("encode_walk: down step with empty stack (step " +
                                          std::to_string(si) + ")");
                out.bits.push(0);
                stack.pop_back();
                ++rep.downs;
                break;
            }
        }
    }
    if (event_at != trace.events.size())
        throw integrity_error("encode_walk: trace has more events than walk resamples");

    rep.total_bits = out.bits.size();
    rep.bound_bits = rep.resamples * static_cast<uint64_t>(std::max(n - 1, 1)) +
                     rep.roots * static_cast<uint64_t>(rep.root_width) + 64;
    return out;
}

ResampleTrace decode_walk(const BitVec& bits, const Cnf& cnf) {
    ResampleTrace trace;
    const int root_width = bits_for_count(cnf.clause_count());
    const int rank_width = bits_for_count(static_cast<uint64_t>(std::max(cnf.max_neighborhood(), 1)));

    BitReader rd(bits);
    std::vector<int> stack;
    while (!rd.done()) {
        if (stack.empty()) {
            uint64_t root = rd.read_uint(root_width);
            if (root >= cnf.clause_count()) throw parse_error("walk code: root id out of range");
            trace.walk.push_back(WalkStep{WalkStep::Root, static_cast<int>(root)});
            trace.events.push_back(static_cast<int>(root));
            stack.push_back(static_cast<int>(root));
            continue;
        }
        if (rd.read_bit()) {
            uint64_t rank = rd.read_uint(rank_width);
            const auto& nbs = cnf.neighbors[static_cast<size_t>(stack.back())];
            if (rank >= nbs.size()) throw parse_error("walk code: neighbor rank out of range");
            int child = nbs[rank];
            trace.walk.push_back(WalkStep{WalkStep::Up, static_cast<int>(rank)});
            trace.events.push_back(child);
            stack.push_back(child);
        } else {
            trace.walk.push_back(WalkStep{WalkStep::Down, 0});
            stack.pop_back();
        }
    }
    return trace;
}

}  // namespace sat
}  // namespace tsat
