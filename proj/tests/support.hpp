#pragma once

#include <random>
#include <string>
#include <vector>

#include "tsat/forbidden.hpp"

// shared test fixtures / generators

inline tsat::words::ForbiddenSet make_fs(int m, std::initializer_list<const char*> strings) {
    tsat::words::ForbiddenSet fs;
    fs.m = m;
    for (const char* s : strings) fs.insert(s);
    return fs;
}

// random profile: alphabet m in {2,3,4}, strings of length 2..max_len
inline tsat::words::ForbiddenSet random_fs(std::mt19937_64& rng, int max_len = 6,
                                           int max_strings = 5) {
    std::uniform_int_distribution<int> md(2, 4);
    tsat::words::ForbiddenSet fs;
    fs.m = md(rng);
    std::uniform_int_distribution<int> cnt(0, max_strings);
    int want = cnt(rng);
    std::uniform_int_distribution<int> len(2, max_len);
    std::uniform_int_distribution<int> letter(0, fs.m - 1);
    for (int i = 0; i < want; ++i) {
        std::string s;
        int L = len(rng);
        for (int j = 0; j < L; ++j) s.push_back(tsat::words::letter_char(letter(rng)));
        fs.insert(s);
    }
    return fs;
}

inline std::vector<uint8_t> random_bits(std::mt19937_64& rng, int n) {
    std::vector<uint8_t> x(static_cast<size_t>(n));
    for (auto& b : x) b = static_cast<uint8_t>(rng() & 1);
    return x;
}
