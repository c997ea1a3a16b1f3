#include "tsat/tetris.hpp"

#include <algorithm>

namespace tsat {
namespace words {

TetrisResult run_tetris(const ForbiddenSet& fs, LetterSource& letters, size_t target_len,
                        size_t max_steps) {
    if (max_steps < target_len)
        throw std::invalid_argument("run_tetris: max_steps below target_len");
    if (letters.alphabet() != fs.m)
        throw std::invalid_argument("run_tetris: letter source alphabet mismatch");

    TetrisResult res;
    std::string& cur = res.current;
    while (cur.size() < target_len) {
        if (res.letters_drawn >= max_steps) {
            res.success = false;
            return res;
        }
        int v = letters.next_letter();
        ++res.letters_drawn;
        cur.push_back(letter_char(v));
        auto suffix = fs.forbidden_suffix(cur);
        if (suffix) {
            cur.erase(cur.size() - suffix->size());
            res.record.events.push_back(RecordEvent{true, *suffix});
        } else {
            res.record.events.push_back(RecordEvent{false, {}});
        }
    }
    res.success = true;
    return res;
}

std::vector<int> reconstruct_letters(const ForbiddenSet& fs, const std::string& final_str,
                                     const Record& record) {
    std::string cur = final_str;
    std::vector<int> letters;
    letters.reserve(record.events.size());

    for (auto it = record.events.rbegin(); it != record.events.rend(); ++it) {
        if (it->deleted) {
            if (!fs.contains(it->erased))
                throw integrity_error("record names '" + it->erased +
                                      "' which is not a forbidden string");
            cur += it->erased;
            auto suffix = fs.forbidden_suffix(cur);
            if (!suffix || *suffix != it->erased)
                throw integrity_error("record deletion of '" + it->erased +
                                      "' does not match the suffix structure at its step");
        } else {
            if (cur.empty())
                throw integrity_error("record has a '+' step but the string is already empty");
            if (fs.forbidden_suffix(cur))
                throw integrity_error("a bare '+' step left a forbidden suffix standing");
        }
        letters.push_back(letter_index(cur.back(), fs.m));
        cur.pop_back();
    }
    if (!cur.empty())
        throw integrity_error("record replay did not end on the empty string");
    std::reverse(letters.begin(), letters.end());
    return letters;
}

}  // namespace words
}  // namespace tsat
