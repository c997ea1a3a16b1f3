#include <bit>
#include <random>

#include "doctest.h"
#include "support.hpp"
#include "tsat/coding.hpp"

using namespace tsat;
using namespace tsat::coding;

TEST_CASE("binary entropy: values fixed by direct evaluation") {
    CHECK(binary_entropy(make_q(1, 2)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(binary_entropy(mpq_class(0)) == 0.0);
    CHECK(binary_entropy(mpq_class(1)) == 0.0);
    // 2 - (3/4) log2 3
    CHECK(binary_entropy(make_q(1, 4)) == doctest::Approx(0.811278).epsilon(1e-6));
    CHECK(binary_entropy(make_q(1, 10)) == doctest::Approx(0.468996).epsilon(1e-6));
    CHECK_THROWS_AS(binary_entropy(make_q(-1, 10)), std::domain_error);
    CHECK_THROWS_AS(binary_entropy(make_q(9, 8)), std::domain_error);
}

TEST_CASE("binary entropy: symmetry and concavity on sampled points") {
    std::mt19937_64 rng(11);
    double max_h = 0;
    for (int i = 0; i < 300; ++i) {
        long num = static_cast<long>(rng() % 1000);
        mpq_class p = make_q(num, 1000);
        double h = binary_entropy(p);
        max_h = std::max(max_h, h);
        CHECK(h >= 0.0);
        CHECK(h <= 1.0);
        CHECK(binary_entropy(1 - p) == doctest::Approx(h).epsilon(1e-12));
        // midpoint concavity against a second sample
        mpq_class q = make_q(static_cast<long>(rng() % 1000), 1000);
        double lhs = binary_entropy((p + q) / 2);
        double rhs = (binary_entropy(p) + binary_entropy(q)) / 2;
        CHECK(lhs >= rhs - 1e-12);
    }
    CHECK(max_h <= 1.0);
    CHECK(binary_entropy(make_q(499, 1000)) < 1.0);
}

TEST_CASE("entropy bound dominates the exhaustive low-weight string count") {
    // for n <= 20, #(n-bit strings with <= k ones) <= 2^(n H(k/n))
    for (int n = 1; n <= 20; ++n) {
        std::vector<uint64_t> by_weight(static_cast<size_t>(n) + 1, 0);
        for (uint64_t x = 0; x < (1ull << n); ++x)
            ++by_weight[static_cast<size_t>(std::popcount(x))];
        uint64_t cum = 0;
        for (int k = 0; k <= n / 2; ++k) {
            cum += by_weight[static_cast<size_t>(k)];
            double bound = std::exp2(n * binary_entropy(make_q(k, n)));
            CHECK(static_cast<double>(cum) <= bound * (1 + 1e-9));
        }
    }
}

TEST_CASE("coder: fair-coin model") {
    SymbolModel m{{make_q(1, 2), make_q(1, 2)}};
    std::vector<int> msg{0, 1, 0};
    CodeBits code = encode(m, msg);
    CHECK(code.length() <= 3 + static_cast<size_t>(kCodeSlackBits));
    CHECK(decode(m, code, msg.size()) == msg);
}

TEST_CASE("coder: empty message") {
    SymbolModel m{{make_q(1, 2), make_q(1, 2)}};
    CodeBits code = encode(m, {});
    CHECK(code.length() <= static_cast<size_t>(kCodeSlackBits));
    CHECK(decode(m, code, 0).empty());
}

TEST_CASE("coder: 1000 skewed symbols hit the stated length") {
    SymbolModel m{{make_q(3, 4), make_q(1, 4)}};
    std::vector<int> msg(1000, 0);
    CodeBits code = encode(m, msg);
    // 1000 * log2(4/3) = 415.04 rounds up to 416
    CHECK(ideal_bits(m, msg) == 416);
    CHECK(code.length() <= 416 + static_cast<size_t>(kCodeSlackBits));
    CHECK(decode(m, code, msg.size()) == msg);
}

TEST_CASE("coder: unknown symbol rejected") {
    SymbolModel m{{make_q(1, 2), make_q(1, 4)}};
    CHECK_THROWS_AS(encode(m, {0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(encode(m, {-1}), std::invalid_argument);
}

TEST_CASE("coder: bad models rejected") {
    CHECK_THROWS_AS(encode(SymbolModel{{make_q(1, 2), mpq_class(0)}}, {0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(encode(SymbolModel{{make_q(3, 4), make_q(1, 2)}}, {0}),
                    std::invalid_argument);
}

TEST_CASE("coder: code point in the dead mass is a decode error") {
    SymbolModel m{{make_q(1, 4), make_q(1, 4)}};  // half the interval unused
    CodeBits corrupt;
    corrupt.bits.push(1);
    corrupt.bits.push(1);  // 3/4, outside the covered half
    CHECK_THROWS_AS(decode(m, corrupt, 2), parse_error);
    CodeBits empty;
    CHECK_THROWS_AS(decode(m, empty, 3), parse_error);
}

TEST_CASE("coder: randomized round trip with length accounting") {
    std::mt19937_64 rng(20240811);
    for (int iter = 0; iter < 120; ++iter) {
        int M = 1 + static_cast<int>(rng() % 6);
        std::vector<mpq_class> probs;
        long total_num = 0;
        std::vector<long> nums;
        for (int i = 0; i < M; ++i) {
            long k = 1 + static_cast<long>(rng() % 8);
            nums.push_back(k);
            total_num += k;
        }
        long den = total_num + static_cast<long>(rng() % 3);  // sometimes strict slack
        for (long k : nums) probs.push_back(make_q(k, den));
        SymbolModel m{probs};

        size_t len = rng() % 200;
        std::vector<int> msg(len);
        for (auto& s : msg) s = static_cast<int>(rng() % static_cast<uint64_t>(M));

        CodeBits code = encode(m, msg);
        CHECK(decode(m, code, msg.size()) == msg);
        CHECK(static_cast<long>(code.length()) <= ideal_bits(m, msg) + kCodeSlackBits);
    }
}

TEST_CASE("coder: long message round trip stays exact") {
    SymbolModel m{{make_q(2, 5), make_q(2, 5), make_q(1, 5)}};
    std::mt19937_64 rng(7);
    std::vector<int> msg(10000);
    for (auto& s : msg) s = static_cast<int>(rng() % 3);
    CodeBits code = encode(m, msg);
    CHECK(static_cast<long>(code.length()) <= ideal_bits(m, msg) + kCodeSlackBits);
    CHECK(decode(m, code, msg.size()) == msg);
}
