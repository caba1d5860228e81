#include "labyrinth/core.hpp"

#include "../support/oracles.hpp"

#include <doctest.h>

#include <array>

using namespace labyrinth;

TEST_CASE("direction deltas")
{
    CHECK(direction_delta(Direction::North) == Offset{0, -1});
    CHECK(direction_delta(Direction::East) == Offset{1, 0});
    CHECK(direction_delta(Direction::South) == Offset{0, 1});
    CHECK(direction_delta(Direction::West) == Offset{-1, 0});

    Offset sum;
    for (Direction d : kDirections) {
        sum.dcol += direction_delta(d).dcol;
        sum.drow += direction_delta(d).drow;
        const Position p{5, 7};
        CHECK(step_toward(step_toward(p, d), opposite(d)) == p);
    }
    CHECK(sum == Offset{0, 0});
}

TEST_CASE("opposite is an involution")
{
    CHECK(opposite(Direction::North) == Direction::South);
    CHECK(opposite(Direction::West) == Direction::East);
    for (Direction d : kDirections) {
        CHECK(opposite(opposite(d)) == d);
        CHECK(turn_right(turn_left(d)) == d);
    }
    CHECK(turn_left(Direction::North) == Direction::West);
    CHECK(turn_right(Direction::North) == Direction::East);
}

TEST_CASE("direction letters")
{
    for (Direction d : kDirections) {
        CHECK(parse_direction_letter(std::string(1, direction_letter(d))) == d);
    }
    CHECK_FALSE(parse_direction_letter("Q"));
    CHECK_FALSE(parse_direction_letter("NE"));
    CHECK_FALSE(parse_direction_letter(""));
}

TEST_CASE("splitmix64 golden vectors")
{
    CHECK(rng_next(Rng{0}).second == oracle::golden_hex("seed0_first"));
    CHECK(rng_next(Rng{0}).second == splitmix_mix(0x9E3779B97F4A7C15ull));
    CHECK(rng_next(Rng{0}).first.state == 0x9E3779B97F4A7C15ull);

    Rng a{1};
    Rng b{2};
    std::uint64_t first_a = 0;
    std::uint64_t first_b = 0;
    std::uint64_t last_a = 0;
    std::uint64_t last_b = 0;
    for (int i = 0; i < 10000; ++i) {
        last_a = draw(a);
        last_b = draw(b);
        if (i == 0) {
            first_a = last_a;
            first_b = last_b;
        }
    }
    CHECK(first_a == oracle::golden_hex("seed1_first"));
    CHECK(first_b == oracle::golden_hex("seed2_first"));
    CHECK(first_a != first_b);
    CHECK(last_a == oracle::golden_hex("seed1_10000th"));
    CHECK(last_b == oracle::golden_hex("seed2_10000th"));
}

TEST_CASE("rng purity and resumption")
{
    CHECK(rng_next(Rng{77}) == rng_next(Rng{77}));

    Rng full{99};
    std::vector<std::uint64_t> reference;
    for (int i = 0; i < 200; ++i) {
        reference.push_back(draw(full));
    }
    Rng first_half{99};
    for (int i = 0; i < 100; ++i) {
        draw(first_half);
    }
    const std::uint64_t saved = first_half.state; // serialize
    Rng resumed{saved};                           // restore
    for (int i = 100; i < 200; ++i) {
        CHECK(draw(resumed) == reference[static_cast<std::size_t>(i)]);
    }
}

TEST_CASE("rng_below bounds")
{
    CHECK_THROWS_AS(rng_below(Rng{1}, 0), InvalidArgument);

    for (std::uint64_t seed : {0ull, 1ull, 0xFFFFFFFFFFFFFFFFull}) {
        CHECK(rng_below(Rng{seed}, 1).second == 0);
    }

    // k = 2: an even raw value maps to 0.
    Rng r{3};
    for (int i = 0; i < 100; ++i) {
        const auto [next_raw, raw] = rng_next(r);
        const auto [next_bounded, bounded] = rng_below(r, 2);
        CHECK(next_raw == next_bounded);
        CHECK(bounded == raw % 2);
        r = next_raw;
    }

    for (std::uint64_t k = 1; k <= 8; ++k) {
        Rng s{k * 1000};
        for (int i = 0; i < 1000; ++i) {
            CHECK(draw_below(s, k) < k);
        }
    }
}

TEST_CASE("rng_below k=4 histogram matches the oracle and is near uniform")
{
    std::array<int, 4> counts{};
    Rng r{123};
    for (int i = 0; i < 100000; ++i) {
        ++counts[draw_below(r, 4)];
    }
    std::istringstream expected(oracle::golden_value("below4_counts_seed123"));
    for (int bucket : counts) {
        int want = 0;
        expected >> want;
        CHECK(bucket == want);
        CHECK(bucket > 25000 - 2000);
        CHECK(bucket < 25000 + 2000);
    }
}

TEST_CASE("event description")
{
    CHECK(describe({EventKind::Moved, 3, Position{2, 1}, Direction::East}) == "3 moved 2,1 E");
    CHECK(describe({EventKind::Growl, 0, std::nullopt, std::nullopt}) == "0 growl");
}
