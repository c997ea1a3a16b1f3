#include <random>

#include "doctest.h"
#include "support.hpp"
#include "tsat/miller.hpp"

using namespace tsat;
using namespace tsat::words;

namespace {

// dense-grid feasibility oracle: any grid point with
// sum a_j x^j < m x - 1, evaluated in exact rationals
bool grid_feasible(const ForbiddenSet& fs, long grid = 2048) {
    QPoly A = miller_poly(fs);
    mpq_class hi(std::max(2, fs.max_length() + 1));
    for (long i = 1; i <= grid; ++i) {
        mpq_class x = hi * i;
        x /= grid;
        if (A.eval(x) < 0) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("miller: empty forbidden set holds with x = 1") {
    ForbiddenSet fs;
    fs.m = 2;
    MillerReport r = check_miller(fs);
    CHECK(r.holds);
    CHECK(r.witness_x == 1);
    CHECK(r.margin == 1);  // 2*1 - 1 - 0
    CHECK(r.c == 0.0);
}

TEST_CASE("miller: {000} over two letters holds near 0.7") {
    ForbiddenSet fs = make_fs(2, {"000"});
    // direct evaluation at the known feasible point 7/10: 0.343 < 0.4
    QPoly A = miller_poly(fs);
    CHECK(A.eval(make_q(7, 10)) == make_q(343, 1000) - make_q(2, 5));
    CHECK(A.eval(make_q(7, 10)) < 0);

    MillerReport r = check_miller(fs);
    CHECK(r.holds);
    CHECK(r.witness_x == make_q(2, 3));  // simplest point of the dip (0.618.., 1)
    CHECK(r.margin == make_q(1, 27));
    CHECK(r.margin > 0);
    CHECK(r.c == doctest::Approx(0.5849625).epsilon(1e-6));
    CHECK(r.witness_x > make_q(1, 2));  // x > 1/m always
}

TEST_CASE("miller: {00,11} over two letters fails (negative discriminant)") {
    ForbiddenSet fs = make_fs(2, {"00", "11"});
    // 2x^2 - 2x + 1 has discriminant 4 - 8 < 0, so A never reaches 0
    MillerReport r = check_miller(fs);
    CHECK(!r.holds);
    CHECK(r.probe_value > 0);
    // the minimizer is x = 1/2 with value 1/2
    CHECK(r.probe_x == make_q(1, 2));
    CHECK(r.probe_value == make_q(1, 2));
}

TEST_CASE("miller: exact verdict agrees with the dense grid on random profiles") {
    std::mt19937_64 rng(4242);
    int holds_count = 0, fails_count = 0;
    for (int it = 0; it < 80; ++it) {
        ForbiddenSet fs = random_fs(rng);
        MillerReport r = check_miller(fs);
        (r.holds ? holds_count : fails_count)++;
        CHECK(r.holds == grid_feasible(fs));
        if (r.holds) {
            QPoly A = miller_poly(fs);
            CHECK(A.eval(r.witness_x) == -r.margin);
            CHECK(r.margin > 0);
            CHECK(r.witness_x > make_q(1, fs.m));
            CHECK(r.witness_x.get_den() <= 1000000);
        }
    }
    CHECK(holds_count > 5);
    CHECK(fails_count > 5);
}

TEST_CASE("record model: empty set gives the bare '+' symbol at 1/(m x)") {
    ForbiddenSet fs;
    fs.m = 2;
    MillerReport r = check_miller(fs);
    RecordModel rm = record_model(fs, r);
    REQUIRE(rm.model.size() == 1);
    CHECK(rm.model.probs[0] == make_q(1, 2));
}

TEST_CASE("record model: the paper-shape probabilities at x = 7/10") {
    ForbiddenSet fs = make_fs(2, {"000"});
    MillerReport r;
    r.holds = true;
    r.witness_x = make_q(7, 10);
    r.margin = make_q(57, 1000);
    RecordModel rm = record_model(fs, r);
    REQUIRE(rm.model.size() == 2);
    CHECK(rm.p0 == make_q(5, 7));
    CHECK(rm.model.probs[1] == make_q(49, 200));  // x^2/m = 0.245
    mpq_class total = rm.model.probs[0] + rm.model.probs[1];
    CHECK(total < 1);
    CHECK(total == make_q(5, 7) + make_q(49, 200));
}

TEST_CASE("record model: mass strictly below 1 whenever the condition holds") {
    std::mt19937_64 rng(909);
    int seen = 0;
    while (seen < 25) {
        ForbiddenSet fs = random_fs(rng);
        MillerReport r = check_miller(fs);
        if (!r.holds) continue;
        ++seen;
        RecordModel rm = record_model(fs, r);
        mpq_class total = 0;
        for (const auto& q : rm.model.probs) total += q;
        CHECK(total < 1);
    }
    ForbiddenSet fs = make_fs(2, {"00", "11"});
    MillerReport bad = check_miller(fs);
    CHECK_THROWS_AS(record_model(fs, bad), std::invalid_argument);
}

TEST_CASE("record coding: tetris records round trip with the stated accounting") {
    std::mt19937_64 rng(60601);
    int coded = 0;
    while (coded < 20) {
        ForbiddenSet fs = random_fs(rng);
        MillerReport mr = check_miller(fs);
        if (!mr.holds) continue;
        ++coded;
        LetterSource letters(rng(), fs.m);
        TetrisResult t = run_tetris(fs, letters, 60, 600);
        RecordCode rc = encode_record(fs, t.record, t.current, mr);
        CHECK(rc.amortized_ok);
        CHECK(rc.within_bound);
        CHECK(rc.total_bits == rc.bits.length());
        Record back = decode_record(fs, mr, rc.bits, t.record.events.size());
        CHECK(back.events == t.record.events);
    }
}

TEST_CASE("record coding: all-plus record under the empty set") {
    ForbiddenSet fs;
    fs.m = 2;
    MillerReport mr = check_miller(fs);
    Record rec;
    for (int i = 0; i < 200; ++i) rec.events.push_back(RecordEvent{false, {}});
    std::string final_str(200, '0');
    RecordCode rc = encode_record(fs, rec, final_str, mr);
    // single-symbol model: log(1/p0) = 1 bit per letter at c = 0
    CHECK(rc.total_bits <= 200 + static_cast<uint64_t>(coding::kCodeSlackBits));
    CHECK(rc.amortized_ok);
    CHECK(rc.within_bound);
}

TEST_CASE("record coding: long {000} runs save about c bits per kept letter") {
    ForbiddenSet fs = make_fs(2, {"000"});
    MillerReport mr = check_miller(fs);
    LetterSource letters(2025, 2);
    TetrisResult t = run_tetris(fs, letters, 500, 50000);
    REQUIRE(t.success);
    RecordCode rc = encode_record(fs, t.record, t.current, mr);
    CHECK(rc.amortized_ok);
    CHECK(rc.within_bound);
    CHECK(rc.saved >= mr.c * 500.0 - coding::kCodeSlackBits);
    Record back = decode_record(fs, mr, rc.bits, t.record.events.size());
    CHECK(back.events == t.record.events);
}
