#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "trigather/grid.hpp"
#include "trigather/rng.hpp"

using namespace trigather;

namespace {

GridPoint random_valid_point(SplitMix64& rng, int span = 100) {
    const int col = rng.next_int(-span, span);
    int hrow = rng.next_int(-span, span);
    if (((col ^ hrow) & 1) != 0) ++hrow;
    return {col, hrow};
}

double euclid_dist(GridPoint a, GridPoint b) {
    const Vec2 ea = to_euclidean(a), eb = to_euclidean(b);
    return std::hypot(ea.x - eb.x, ea.y - eb.y);
}

}  // namespace

TEST_CASE("neighbor enumeration follows the documented order") {
    const auto n0 = neighbors({0, 0});
    REQUIRE(n0 == std::array<GridPoint, 6>{{{0, 2},
                                            {1, 1},
                                            {1, -1},
                                            {0, -2},
                                            {-1, -1},
                                            {-1, 1}}});
    const auto n1 = neighbors({1, 1});
    REQUIRE(n1 == std::array<GridPoint, 6>{{{1, 3},
                                            {2, 2},
                                            {2, 0},
                                            {1, -1},
                                            {0, 0},
                                            {0, 2}}});
}

TEST_CASE("off-lattice points are rejected") {
    REQUIRE_FALSE(is_valid({0, 1}));
    REQUIRE_THROWS_AS(neighbors({0, 1}), std::invalid_argument);
    REQUIRE_THROWS_AS(to_euclidean({3, 2}), std::invalid_argument);
}

TEST_CASE("euclidean embedding") {
    const Vec2 origin = to_euclidean({0, 0});
    REQUIRE(origin.x == 0.0);
    REQUIRE(origin.y == 0.0);

    const Vec2 two_cols = to_euclidean({2, 0});
    REQUIRE_THAT(two_cols.x, Catch::Matchers::WithinAbs(std::sqrt(3.0), 1e-12));
    REQUIRE(two_cols.y == 0.0);

    const Vec2 diag = to_euclidean({1, 1});
    REQUIRE_THAT(diag.x, Catch::Matchers::WithinAbs(std::sqrt(3.0) / 2, 1e-12));
    REQUIRE_THAT(diag.y, Catch::Matchers::WithinAbs(0.5, 1e-12));
    REQUIRE_THAT(euclid_dist({1, 1}, {0, 0}), Catch::Matchers::WithinAbs(1.0, 1e-12));
}

TEST_CASE("direction_between identifies adjacency") {
    REQUIRE(direction_between({0, 0}, {1, 1}) == Direction::UpRight);
    REQUIRE(direction_between({0, 0}, {0, -2}) == Direction::Down);
    REQUIRE_FALSE(direction_between({0, 0}, {2, 0}).has_value());
    REQUIRE_FALSE(direction_between({0, 0}, {0, 0}).has_value());
}

TEST_CASE("chirality mapping") {
    REQUIRE(localize(Direction::UpLeft, Chirality::Mirrored) == Direction::UpRight);
    REQUIRE(localize(Direction::Up, Chirality::Mirrored) == Direction::Up);
    REQUIRE(localize(Direction::Down, Chirality::Standard) == Direction::Down);
    for (Direction d : all_directions()) {
        for (Chirality c : {Chirality::Standard, Chirality::Mirrored}) {
            REQUIRE(globalize(localize(d, c), c) == d);
            REQUIRE(localize(globalize(d, c), c) == d);
        }
    }
}

TEST_CASE("neighbors are symmetric and at unit distance") {
    SplitMix64 rng(20240817);
    for (int trial = 0; trial < 500; ++trial) {
        const GridPoint p = random_valid_point(rng);
        for (const GridPoint q : neighbors(p)) {
            REQUIRE(is_valid(q));
            const auto back = neighbors(q);
            REQUIRE(std::find(back.begin(), back.end(), p) != back.end());
            REQUIRE_THAT(euclid_dist(p, q), Catch::Matchers::WithinAbs(1.0, 1e-12));
        }
    }
}

TEST_CASE("splitmix64 matches the reference sequence") {
    SplitMix64 zero(0);
    REQUIRE(zero.next() == 0xe220a8397b1dcdafull);
    REQUIRE(zero.next() == 0x6e789e6aa1b965f4ull);
    REQUIRE(zero.next() == 0x06c45d188009454full);
    SplitMix64 fortytwo(42);
    REQUIRE(fortytwo.next() == 0xbdd732262feb6e95ull);
}
