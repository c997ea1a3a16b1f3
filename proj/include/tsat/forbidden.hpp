#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tsat/rational.hpp"

namespace tsat {
namespace words {

// Letters are displayed as 0-9 then a-z; alphabet sizes up to 36.
char letter_char(int v);
int letter_index(char c, int alphabet);

// Alphabet size m plus the forbidden strings grouped by length (j >= 2).
// Length-1 strings are rejected: banning single letters just shrinks the
// alphabet.
struct ForbiddenSet {
    int m = 2;
    std::map<int, std::set<std::string>> by_length;

    long a(int j) const {
        auto it = by_length.find(j);
        return it == by_length.end() ? 0 : static_cast<long>(it->second.size());
    }
    int max_length() const { return by_length.empty() ? 0 : by_length.rbegin()->first; }
    size_t total() const {
        size_t t = 0;
        for (const auto& [j, s] : by_length) t += s.size();
        return t;
    }
    bool contains(const std::string& s) const {
        auto it = by_length.find(static_cast<int>(s.size()));
        return it != by_length.end() && it->second.count(s) != 0;
    }

    void insert(const std::string& s);

    // forbidden strings in canonical order: by length, then lexicographic
    std::vector<std::string> ordered() const;

    // shortest forbidden suffix of s, if any
    std::optional<std::string> forbidden_suffix(const std::string& s) const;

    // s contains some forbidden factor anywhere (scan; test oracle pace)
    bool has_forbidden_factor(const std::string& s) const;
};

// File format: first content line `alphabet m`, then one forbidden string
// per line. Blank lines and `#` comments ignored.
ForbiddenSet parse_forbidden_file(const std::string& text);

std::string emit_forbidden_file(const ForbiddenSet& fs);

}  // namespace words
}  // namespace tsat
