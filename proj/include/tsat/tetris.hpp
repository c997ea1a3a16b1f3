#pragma once

#include <string>
#include <vector>

#include "tsat/forbidden.hpp"
#include "tsat/random_source.hpp"

namespace tsat {
namespace words {

// One record entry per letter drawn: either a bare '+' (letter stayed) or
// '+<deleted>' (appending the letter exposed a forbidden suffix, which was
// removed on the spot).
struct RecordEvent {
    bool deleted = false;
    std::string erased;  // the forbidden string removed; empty for bare '+'

    bool operator==(const RecordEvent& o) const = default;
};

struct Record {
    std::vector<RecordEvent> events;

    size_t plus_count() const {
        size_t n = 0;
        for (const auto& e : events)
            if (!e.deleted) ++n;
        return n;
    }
};

struct TetrisResult {
    bool success = false;  // false = letter budget exhausted before target
    std::string current;
    Record record;
    size_t letters_drawn = 0;
};

// Grow a factor-free string: append uniform letters, delete any forbidden
// suffix immediately (the shortest one when several match). Stops at
// target_len letters of output or after max_steps letters drawn.
TetrisResult run_tetris(const ForbiddenSet& fs, LetterSource& letters, size_t target_len,
                        size_t max_steps);

// Backward replay of (final, record): re-adds each deleted string, pops each
// appended letter, and recovers the exact letter sequence drawn. Verifies
// the process invariants along the way (deleted strings must be the shortest
// forbidden suffix at their step; bare '+' steps must leave no forbidden
// suffix; the replay must end on the empty string) and throws
// integrity_error on any mismatch.
std::vector<int> reconstruct_letters(const ForbiddenSet& fs, const std::string& final_str,
                                     const Record& record);

}  // namespace words
}  // namespace tsat
