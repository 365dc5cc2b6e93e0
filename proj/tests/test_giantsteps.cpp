#include "knottunnel/giantsteps.hpp"

#include "enumerate.hpp"

#include "doctest.h"

#include <stdexcept>
#include <string>
#include <vector>

namespace kt = knottunnel;

TEST_CASE("transfer matrices match the configuration table") {
    CHECK(kt::transfer_matrix(kt::Config::L1) == kt::Mat2{1, 0, 1, 1});
    CHECK(kt::transfer_matrix(kt::Config::R1) == kt::Mat2{1, 1, 0, 1});
    CHECK(kt::transfer_matrix(kt::Config::L2) == kt::Mat2{0, 0, 1, 1});
    CHECK(kt::transfer_matrix(kt::Config::R2) == kt::Mat2{1, 1, 0, 0});
}

TEST_CASE("block decomposition of the worked example") {
    kt::BlockDecomposition d = kt::decompose(kt::parse_sstring("0011100011100"));
    CHECK(d.semisimple_prefix_length == 2);
    CHECK(d.blocks ==
          std::vector<std::string>{"11", "1000", "11", "100"});
    CHECK(d.configs ==
          std::vector<kt::Config>{kt::Config::L1, kt::Config::R2,
                                  kt::Config::R1});
    REQUIRE(d.final_config.has_value());
    CHECK(*d.final_config == kt::Config::L2);
    CHECK_FALSE(d.leftover_one);
    CHECK(d.final_vector == std::pair{0, 1});
}

TEST_CASE("block decomposition with a leftover 1") {
    kt::BlockDecomposition d = kt::decompose(kt::parse_sstring("111"));
    CHECK(d.blocks == std::vector<std::string>{"11"});
    CHECK(d.configs == std::vector<kt::Config>{kt::Config::L1});
    CHECK(d.leftover_one);
    CHECK(d.final_vector == std::pair{1, 1});
}

TEST_CASE("alternating 10-blocks") {
    kt::BlockDecomposition d = kt::decompose(kt::parse_sstring("1010"));
    CHECK(d.blocks == std::vector<std::string>{"10", "10"});
    CHECK(d.configs == std::vector<kt::Config>{kt::Config::R1});
    REQUIRE(d.final_config.has_value());
    CHECK(*d.final_config == kt::Config::L1);

    // Configurations of "10101010..." alternate R1, L1, R1, L1.
    kt::BlockDecomposition alt = kt::decompose(kt::parse_sstring("10101010"));
    CHECK(alt.configs ==
          std::vector<kt::Config>{kt::Config::R1, kt::Config::L1,
                                  kt::Config::R1});
    CHECK(*alt.final_config == kt::Config::L1);

    kt::BlockDecomposition rep = kt::decompose(kt::parse_sstring("100100100"));
    CHECK(rep.configs ==
          std::vector<kt::Config>{kt::Config::R2, kt::Config::L2});
    CHECK(*rep.final_config == kt::Config::R2);
}

TEST_CASE("decompose rejects all-zero strings") {
    CHECK_THROWS_AS(kt::decompose(kt::parse_sstring("000")),
                    std::domain_error);
}

TEST_CASE("fast counts on the printed examples") {
    kt::GiantStepCount r = kt::count_minimal_fast(
        kt::parse_sstring("0011100011100"));
    CHECK(r.count == 4);
    CHECK(r.product == kt::Mat2{1, 2, 1, 2});

    CHECK(kt::count_minimal_fast(kt::parse_sstring("111111")).count == 1);
    CHECK(kt::count_minimal_fast(kt::parse_sstring("101010")).count == 3);
    CHECK(kt::count_minimal_fast(kt::parse_sstring("")).count == 1);
    CHECK(kt::count_minimal_fast(kt::parse_sstring("0000")).count == 1);
}

TEST_CASE("example families") {
    auto repeat = [](const std::string& unit, int k) {
        std::string out;
        for (int i = 0; i < k; ++i) out += unit;
        return kt::SString{out};
    };
    kt::Integer fib_a = 1, fib_b = 1; // (a_0, a_1, ...) = (1, 1, 2, 3, 5, ...)
    for (int k = 1; k <= 8; ++k) {
        kt::Integer next = fib_a + fib_b;
        fib_a = fib_b;
        fib_b = next;
        CHECK(kt::count_minimal_fast(repeat("10", k)).count == fib_a);
        CHECK(kt::count_minimal_fast(repeat("100", k)).count == 1);
        CHECK(kt::count_minimal_fast(repeat("1", 2 * k)).count == 1);
        CHECK(kt::count_minimal_fast(repeat("1", 2 * k - 1)).count == k + 1);
    }
}

TEST_CASE("unique counts are sparse: R1 L1 R1 L1 has all entries >= 2") {
    kt::Mat2 product = kt::transfer_matrix(kt::Config::R1) *
                       kt::transfer_matrix(kt::Config::L1) *
                       kt::transfer_matrix(kt::Config::R1) *
                       kt::transfer_matrix(kt::Config::L1);
    CHECK(product.a >= 2);
    CHECK(product.b >= 2);
    CHECK(product.c >= 2);
    CHECK(product.d >= 2);
}

TEST_CASE("fast algorithm agrees with the corridor oracle") {
    kt::testing::for_each_sstring(12, [](const kt::SString& s) {
        CHECK(kt::count_minimal_fast(s).count == kt::count_minimal_oracle(s));
    });
}

TEST_CASE("blocks reassemble the input string") {
    kt::testing::for_each_sstring(12, [](const kt::SString& s) {
        if (!s.contains_one()) return;
        kt::BlockDecomposition d = kt::decompose(s);
        std::string rebuilt(d.semisimple_prefix_length, '0');
        for (const std::string& block : d.blocks) rebuilt += block;
        if (d.leftover_one) rebuilt += '1';
        CHECK(rebuilt == s.bits);
    });
}
