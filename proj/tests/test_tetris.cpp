#include <random>

#include "doctest.h"
#include "support.hpp"
#include "tsat/tetris.hpp"

using namespace tsat;
using namespace tsat::words;

TEST_CASE("forbidden set: parsing and validation") {
    ForbiddenSet fs = parse_forbidden_file("# comment\nalphabet 2\n000\n11 # inline\n\n");
    CHECK(fs.m == 2);
    CHECK(fs.a(3) == 1);
    CHECK(fs.a(2) == 1);
    CHECK(fs.contains("000"));
    CHECK_THROWS_AS(parse_forbidden_file("alphabet 1\n"), parse_error);
    CHECK_THROWS_AS(parse_forbidden_file("000\n"), parse_error);
    CHECK_THROWS_AS(parse_forbidden_file("alphabet 2\n0\n"), parse_error);   // length 1
    CHECK_THROWS_AS(parse_forbidden_file("alphabet 2\n012\n"), parse_error); // letter 2
    ForbiddenSet rt = parse_forbidden_file(emit_forbidden_file(fs));
    CHECK(rt.m == fs.m);
    CHECK(rt.ordered() == fs.ordered());
}

TEST_CASE("tetris: empty forbidden set is pure growth") {
    ForbiddenSet fs;
    fs.m = 2;
    LetterSource letters(42, 2);
    TetrisResult r = run_tetris(fs, letters, 100, 1000);
    CHECK(r.success);
    CHECK(r.current.size() == 100);
    CHECK(r.letters_drawn == 100);
    CHECK(r.record.events.size() == 100);
    for (const auto& e : r.record.events) CHECK(!e.deleted);
    // the string is exactly the letters drawn
    for (size_t i = 0; i < 100; ++i)
        CHECK(letter_index(r.current[i], 2) == letters.log()[i]);
}

TEST_CASE("tetris: avoids 000 and the result scans clean") {
    ForbiddenSet fs = make_fs(2, {"000"});
    for (uint64_t seed = 0; seed < 25; ++seed) {
        LetterSource letters(seed, 2);
        TetrisResult r = run_tetris(fs, letters, 50, 100000);
        REQUIRE(r.success);
        CHECK(r.current.size() == 50);
        CHECK(!fs.has_forbidden_factor(r.current));  // full-scan oracle
    }
}

TEST_CASE("tetris: all length-2 strings forbidden blocks growth") {
    ForbiddenSet fs = make_fs(2, {"00", "01", "10", "11"});
    LetterSource letters(7, 2);
    TetrisResult r = run_tetris(fs, letters, 10, 500);
    CHECK(!r.success);
    CHECK(r.letters_drawn == 500);
    CHECK(r.current.size() <= 1);
    // every second step deletes
    size_t deletions = 0;
    for (const auto& e : r.record.events) deletions += e.deleted ? 1 : 0;
    CHECK(deletions == 250);
}

TEST_CASE("tetris: length bookkeeping") {
    std::mt19937_64 rng(99);
    for (int it = 0; it < 40; ++it) {
        ForbiddenSet fs = random_fs(rng);
        LetterSource letters(rng(), fs.m);
        TetrisResult r = run_tetris(fs, letters, 40, 4000);
        long erased = 0;
        for (const auto& e : r.record.events)
            if (e.deleted) erased += static_cast<long>(e.erased.size()) - 1;
        CHECK(static_cast<long>(r.current.size()) ==
              static_cast<long>(r.record.plus_count()) - erased);
        CHECK(r.record.events.size() == r.letters_drawn);
        CHECK(!fs.has_forbidden_factor(r.current));
    }
}

TEST_CASE("reconstruction: the record and final string recover every letter") {
    std::mt19937_64 rng(123);
    int exhausted_seen = 0;
    for (int it = 0; it < 300; ++it) {
        ForbiddenSet fs = random_fs(rng);
        LetterSource letters(rng(), fs.m);
        size_t target = 10 + rng() % 60;
        TetrisResult r = run_tetris(fs, letters, target, target * 4 + 4);
        if (!r.success) ++exhausted_seen;
        auto rec = reconstruct_letters(fs, r.current, r.record);
        CHECK(rec == letters.log());
    }
    CHECK(exhausted_seen > 0);  // budget cases exercised too
}

TEST_CASE("reconstruction: empty record, empty string") {
    ForbiddenSet fs = make_fs(2, {"00"});
    CHECK(reconstruct_letters(fs, "", Record{}).empty());
}

TEST_CASE("reconstruction: inconsistent pairs are refused") {
    ForbiddenSet fs = make_fs(2, {"00", "000"});
    // '+' step on an already-empty string
    CHECK_THROWS_AS(reconstruct_letters(fs, "", Record{{RecordEvent{false, {}}}}),
                    integrity_error);
    // a deletion naming a string outside the set
    CHECK_THROWS_AS(reconstruct_letters(fs, "", Record{{RecordEvent{true, "01"}}}),
                    integrity_error);
    // deleting 000 when the process would have taken the shorter 00 first
    CHECK_THROWS_AS(reconstruct_letters(fs, "", Record{{RecordEvent{true, "000"}}}),
                    integrity_error);
    // a bare '+' that would have left a forbidden suffix standing
    CHECK_THROWS_AS(
        reconstruct_letters(fs, "00", Record{{RecordEvent{false, {}}, RecordEvent{false, {}}}}),
        integrity_error);
    // replay that does not end on the empty string
    CHECK_THROWS_AS(reconstruct_letters(fs, "01", Record{{RecordEvent{false, {}}}}),
                    integrity_error);
}

TEST_CASE("letter source: rejection sampling stays uniform-ish and logged") {
    LetterSource src(5, 3);  // non-power-of-two alphabet
    std::vector<int> counts(3, 0);
    for (int i = 0; i < 3000; ++i) ++counts[static_cast<size_t>(src.next_letter())];
    CHECK(src.log().size() == 3000);
    for (int c : counts) CHECK(c > 800);
}
