#include "knottunnel/torus.hpp"

#include "knottunnel/bounds.hpp"

#include "doctest.h"

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace kt = knottunnel;

namespace {

std::string letters_of(const std::vector<kt::Letter>& word) {
    std::string out;
    for (kt::Letter l : word) out += kt::to_string(l);
    return out;
}

// Slot-simulation oracle for the s-string: track which disk occupies the
// rho and lambda slots, give each new tunnel disk a fresh id, and compare
// the carried (retained) disk of consecutive cablings.
std::string sstring_by_slots(const std::vector<kt::Letter>& letters) {
    int next_id = 1;
    int rho = 0, lambda = 0;
    std::vector<int> retained;
    for (kt::Letter l : letters) {
        if (l == kt::Letter::U) {
            retained.push_back(lambda);
            rho = next_id++;
        } else {
            retained.push_back(rho);
            lambda = next_id++;
        }
    }
    // The first cabling has no s entry: the string starts with the
    // comparison between the second and third cablings.
    std::string bits;
    for (std::size_t i = 2; i < retained.size(); ++i) {
        bits.push_back(retained[i] == retained[i - 1] ? '0' : '1');
    }
    return bits;
}

} // namespace

TEST_CASE("normalize") {
    kt::NormalizedTorus nt = kt::normalize({181, -48});
    CHECK(nt.p == 181);
    CHECK(nt.q == 48);
    CHECK(nt.mirrored);

    nt = kt::normalize({29, 41});
    CHECK(nt.p == 41);
    CHECK(nt.q == 29);
    CHECK_FALSE(nt.mirrored);

    nt = kt::normalize({-3, -2});
    CHECK(nt.p == 3);
    CHECK(nt.q == 2);
    CHECK_FALSE(nt.mirrored);

    CHECK_THROWS_AS(kt::normalize({4, 6}), std::domain_error);
    CHECK_THROWS_AS(kt::normalize({0, 5}), std::domain_error);
}

TEST_CASE("letter words") {
    CHECK(letters_of(kt::letter_word(kt::cf_expand(41, 29))) == "UULLUUL");
    CHECK(letters_of(kt::letter_word(kt::cf_expand(41, 9))) == "ULUUU");
    CHECK(letters_of(kt::letter_word(kt::CF{{3, 2}})) == "U");
    CHECK_THROWS_AS(kt::letter_word(kt::CF{{5}}), std::domain_error);
}

TEST_CASE("cabling trace of (41,29)") {
    kt::CablingTrace trace = kt::cabling_trace(kt::normalize({41, 29}));
    CHECK(trace.m0 == kt::SimpleSlope{1, 3});
    std::vector<kt::Integer> slopes;
    for (const auto& step : trace.steps) {
        if (step.slope) slopes.push_back(*step.slope);
    }
    CHECK(slopes == std::vector<kt::Integer>{5, 17, 29, 99, 169, 577});
    CHECK(trace.steps.back().matrix == kt::Mat2{17, 12, 24, 17});
    CHECK(trace.steps.back().stage_knot ==
          std::pair<kt::Integer, kt::Integer>{41, 29});
    CHECK(trace.s_string.bits == "10101");
    CHECK(kt::slope_line(trace) == "[ 1/3 ], 5, 17, 29, 99, 169, 577");
}

TEST_CASE("cabling trace of the mirrored (181,-48)") {
    kt::CablingTrace trace = kt::cabling_trace(kt::normalize({181, -48}));
    CHECK(trace.m0 == kt::SimpleSlope{6, 7});
    CHECK(kt::slope_line(trace) ==
          "[ 6/7 ], -15, -23, -31, -151, -271, -883, -2157, -3431");
}

TEST_CASE("single-cabling trace of (7,2)") {
    kt::CablingTrace trace = kt::cabling_trace(kt::normalize({7, 2}));
    CHECK(trace.m0 == kt::SimpleSlope{1, 7});
    CHECK(trace.steps.size() == 1);
    CHECK_FALSE(trace.steps.front().slope.has_value());
    CHECK(trace.s_string.bits.empty());
    CHECK(kt::slope_line(trace) == "[ 1/7 ]");
}

TEST_CASE("derived s-strings") {
    CHECK(kt::torus_sstring(kt::normalize({41, 29})).bits == "10101");
    CHECK(kt::torus_sstring(kt::normalize({41, 15})).bits == "0110");
    CHECK(kt::torus_sstring(kt::normalize({41, 9})).bits == "100");
}

TEST_CASE("adjacent-letter rule matches the slot simulation") {
    for (int p = 3; p <= 120; ++p) {
        for (int q = 2; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            kt::CablingTrace trace = kt::cabling_trace(
                kt::normalize({p, q}));
            CHECK(trace.s_string.bits == sstring_by_slots(trace.letters));
        }
    }
}

TEST_CASE("torus depth") {
    CHECK(kt::torus_depth(kt::normalize({41, 29})) == 4);
    CHECK(kt::torus_depth(kt::normalize({3, 2})) == 1);
    CHECK(kt::torus_depth(kt::normalize({5, 1})) == 0);

    const std::vector<int> expected{1, 1, 1, 1, 1, 1, 1, 2, 1, 2, 3, 2, 1,
                                    2, 3, 3, 3, 2, 1, 1, 2, 3, 3, 3, 3, 2,
                                    3, 4, 3, 2, 3, 2, 2, 2, 2, 2, 2, 2, 1};
    std::vector<int> depths;
    for (int n = 2; n <= 40; ++n) {
        depths.push_back(kt::torus_depth(kt::normalize({41, n})));
    }
    CHECK(depths == expected);
}

TEST_CASE("torus classification") {
    CHECK(kt::torus_classify({41, 40}) == kt::TunnelClass::Semisimple);
    CHECK(kt::torus_classify({41, 29}) == kt::TunnelClass::Regular);
    CHECK(kt::torus_classify({5, 1}) == kt::TunnelClass::Trivial);
    CHECK(kt::torus_classify({7, 2}) == kt::TunnelClass::Simple);
    CHECK(kt::torus_classify({1, 1}) == kt::TunnelClass::Trivial);

    // Coherence with the generic classifier over s-string and cabling count.
    for (int p = 3; p <= 60; ++p) {
        for (int q = 2; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            kt::CablingTrace trace = kt::cabling_trace(
                kt::normalize({p, q}));
            int cablings = static_cast<int>(trace.letters.size());
            CHECK(kt::torus_classify({p, q}) ==
                  kt::classify(trace.s_string, cablings > 1 ? cablings : 1));
        }
    }
}

TEST_CASE("torus bridge number") {
    CHECK(kt::torus_bridge_number(kt::normalize({41, 29})) == 29);
    CHECK(kt::torus_bridge_number(kt::normalize({3, 2})) == 2);
    CHECK(kt::torus_bridge_number(kt::normalize({7, 5})) == 5);
}

TEST_CASE("mirror coherence") {
    for (int p = 3; p <= 60; ++p) {
        for (int q = 2; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            kt::CablingTrace plain = kt::cabling_trace(kt::normalize({p, q}));
            kt::CablingTrace mirror = kt::cabling_trace(
                kt::normalize({p, -q}));
            CHECK(mirror.m0 == kt::negate(plain.m0));
            REQUIRE(mirror.steps.size() == plain.steps.size());
            for (std::size_t i = 0; i < plain.steps.size(); ++i) {
                if (plain.steps[i].slope) {
                    CHECK(*mirror.steps[i].slope == -*plain.steps[i].slope);
                }
            }
        }
    }
}

TEST_CASE("Pell convergents realize the minimal torus bridge growth") {
    const std::vector<std::pair<int, int>> convergents{
        {3, 2}, {7, 5}, {17, 12}, {41, 29}, {99, 70}};
    int d = 0;
    for (auto [p, q] : convergents) {
        ++d;
        kt::NormalizedTorus nt = kt::normalize({p, q});
        CHECK(kt::torus_depth(nt) == d);
        CHECK(kt::torus_bridge_number(nt) == kt::torus_min_bridge_at_depth(d));
    }
}
