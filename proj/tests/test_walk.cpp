#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "saw/errors.hpp"
#include "saw/walk.hpp"

#include <algorithm>
#include <random>

using namespace saw;

namespace {

const Step up{1, 1}, down{1, -1}, right{0, 1}, left{0, -1};

Walk walk2(std::vector<Step> steps) { return Walk(LatticeDim(2), std::move(steps)); }

}  // namespace

TEST_CASE("lattice dimension must be at least 2") {
    CHECK_THROWS_AS(LatticeDim(1), DomainError);
    CHECK_THROWS_AS(LatticeDim(0), DomainError);
    CHECK(LatticeDim(3).directions() == 6);
    CHECK(LatticeDim(3).height_axis() == 2);
}

TEST_CASE("direction encoding round-trips") {
    for (int dir = 0; dir < 8; ++dir) CHECK(direction_of(step_from_direction(dir)) == dir);
}

TEST_CASE("malformed steps are rejected") {
    CHECK_THROWS_AS(Walk(LatticeDim(2), {Step{2, 1}}), DomainError);
    CHECK_THROWS_AS(Walk(LatticeDim(2), {Step{0, 0}}), DomainError);
}

TEST_CASE("self-avoidance") {
    CHECK(is_self_avoiding(walk2({})));
    CHECK_FALSE(is_self_avoiding(walk2({up, down})));
    CHECK_FALSE(is_self_avoiding(walk2({up, right, down, left})));
    CHECK(is_self_avoiding(walk2({up, right, down})));
}

TEST_CASE("classify") {
    SUBCASE("empty walk is a bridge of height 0") {
        const auto wc = classify(walk2({}));
        CHECK(wc.is_saw);
        CHECK(wc.is_bridge);
        CHECK(wc.end_height == 0);
    }
    SUBCASE("single step up") {
        const auto wc = classify(walk2({up}));
        CHECK(wc.is_bridge);
        CHECK(wc.end_height == 1);
    }
    SUBCASE("single sideways step is not a bridge") {
        const auto wc = classify(walk2({right}));
        CHECK(wc.is_saw);
        CHECK_FALSE(wc.is_bridge);
    }
    SUBCASE("endpoint may tie the maximum") {
        const auto wc = classify(walk2({up, right}));
        CHECK(wc.is_bridge);
        CHECK(wc.end_height == 1);
        CHECK(wc.max_height == 1);
    }
    SUBCASE("endpoint below the maximum") {
        CHECK_FALSE(classify(walk2({up, up, right, down})).is_bridge);
    }
    SUBCASE("return to the start height") {
        CHECK_FALSE(classify(walk2({up, right, down})).is_bridge);
    }
    SUBCASE("height is the last coordinate in d = 3") {
        const Walk w(LatticeDim(3), {Step{2, 1}, Step{1, 1}});
        CHECK(classify(w).is_bridge);
        CHECK_FALSE(classify(Walk(LatticeDim(3), {Step{1, 1}})).is_bridge);
    }
}

TEST_CASE("property: bridge implies SAW, and bounds on end height") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 3000; ++trial) {
        const int d = 2 + trial % 3;
        const int len = static_cast<int>(rng() % 9);
        std::vector<Step> steps;
        for (int i = 0; i < len; ++i) steps.push_back(step_from_direction(static_cast<int>(rng() % (2 * d))));
        const Walk w(LatticeDim(d), steps);
        const auto wc = classify(w);
        if (wc.is_bridge) {
            CHECK(is_self_avoiding(w));
            CHECK(wc.end_height == wc.max_height);
            if (len >= 1) {
                CHECK(wc.end_height >= 1);
                CHECK(wc.end_height <= len);
            }
        }
    }
}

TEST_CASE("property: classify ignores permutations and reflections of the first d-1 axes") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 2000; ++trial) {
        const int d = 3;
        const int len = static_cast<int>(rng() % 8);
        std::vector<Step> steps;
        for (int i = 0; i < len; ++i) steps.push_back(step_from_direction(static_cast<int>(rng() % 6)));
        std::vector<int> perm{0, 1};
        if (rng() % 2) std::swap(perm[0], perm[1]);
        const std::int8_t flip[2] = {static_cast<std::int8_t>(rng() % 2 ? 1 : -1),
                                     static_cast<std::int8_t>(rng() % 2 ? 1 : -1)};
        std::vector<Step> image;
        for (const Step s : steps) {
            if (s.axis == 2) image.push_back(s);
            else image.push_back(Step{static_cast<std::uint8_t>(perm[s.axis]), static_cast<std::int8_t>(s.sign * flip[s.axis])});
        }
        const auto a = classify(Walk(LatticeDim(d), steps));
        const auto b = classify(Walk(LatticeDim(d), image));
        CHECK(a.is_saw == b.is_saw);
        CHECK(a.is_bridge == b.is_bridge);
        CHECK(a.end_height == b.end_height);
    }
}
