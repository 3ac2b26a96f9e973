#include "doctest.h"

#include "rosel/bitvector.hpp"
#include "rosel/errors.hpp"

#include <random>
#include <vector>

using namespace rosel;

namespace {

RsBitVector build_from(const std::vector<bool>& bits, WorkspaceMeter& meter,
                       SelectSupport support = SelectSupport::OnesAndZeros) {
    BitBuffer buffer(meter, bits.size(), "test/bits");
    for (bool b : bits) buffer.append(b);
    return RsBitVector::build(std::move(buffer), meter, support);
}

std::vector<bool> random_bits(std::uint64_t length, double density, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(density);
    std::vector<bool> bits(length);
    for (std::uint64_t i = 0; i < length; ++i) bits[i] = coin(rng);
    return bits;
}

/// Checks every position and rank against prefix sums.
void check_exhaustive(const std::vector<bool>& bits) {
    WorkspaceMeter meter;
    const RsBitVector v = build_from(bits, meter);
    std::uint64_t ones = 0;
    std::uint64_t zeros = 0;
    CHECK(v.rank(0) == 0);
    for (std::uint64_t i = 1; i <= bits.size(); ++i) {
        REQUIRE(v.access(i) == bits[i - 1]);
        if (bits[i - 1]) {
            ++ones;
            REQUIRE(v.select(ones) == i);
        } else {
            ++zeros;
            REQUIRE(v.complement_select(zeros) == i);
        }
        REQUIRE(v.rank(i) == ones);
        REQUIRE(v.rank0(i) == zeros);
    }
    CHECK(v.ones() == ones);
    CHECK(v.zeros() == zeros);
}

}  // namespace

TEST_CASE("bit vector examples") {
    WorkspaceMeter meter;
    const RsBitVector v = build_from({true, false, true, true, false}, meter);
    CHECK(v.rank(3) == 2);
    CHECK(v.select(3) == 4);
    CHECK(v.complement_select(2) == 5);
    CHECK(v.rank(0) == 0);
    CHECK_THROWS_AS(v.select(4), BoundsError);
    CHECK_THROWS_AS(v.access(6), BoundsError);
    CHECK_THROWS_AS(v.access(0), BoundsError);
    CHECK_THROWS_AS(v.rank(6), BoundsError);
}

TEST_CASE("select without zero support refuses complement select") {
    WorkspaceMeter meter;
    const RsBitVector v = build_from({true, false}, meter, SelectSupport::OnesOnly);
    CHECK_THROWS_AS(v.complement_select(1), UsageError);
}

TEST_CASE("unfinished buffer is rejected") {
    WorkspaceMeter meter;
    BitBuffer buffer(meter, 3, "test/bits");
    buffer.append(true);
    CHECK_THROWS_AS(RsBitVector::build(std::move(buffer), meter), UsageError);
}

TEST_CASE("landmarks hold the popcount before each word") {
    WorkspaceMeter meter;
    std::vector<bool> bits(200, false);
    for (int i = 0; i < 70; ++i) bits[static_cast<std::size_t>(i)] = true;
    const RsBitVector v = build_from(bits, meter);
    CHECK(v.landmark(0) == 0);
    CHECK(v.landmark(1) == 64);
    CHECK(v.landmark(2) == 70);
    CHECK(v.landmark(3) == 70);
}

TEST_CASE("rank and select agree with prefix sums at every density") {
    for (double density : {0.0, 0.001, 0.01, 0.1, 0.5, 0.9, 0.999, 1.0}) {
        for (std::uint64_t length : {1u, 2u, 63u, 64u, 65u, 1000u, 4097u, 70000u}) {
            CAPTURE(density);
            CAPTURE(length);
            check_exhaustive(random_bits(length, density, length * 31 + 7));
        }
    }
}

TEST_CASE("clustered bits mix sparse and dense select blocks") {
    std::vector<bool> bits(200000, false);
    std::mt19937_64 rng(5);
    for (int cluster = 0; cluster < 40; ++cluster) {
        const std::uint64_t start = rng() % 190000;
        for (std::uint64_t i = start; i < start + 300; ++i) bits[i] = true;
    }
    check_exhaustive(bits);
    for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = !bits[i];
    check_exhaustive(bits);
}

TEST_CASE("support structures stay a small fraction of the vector") {
    WorkspaceMeter meter;
    const RsBitVector v = build_from(random_bits(1u << 20, 0.5, 3), meter);
    CHECK(v.storage_bits() == (1u << 20));
    CHECK(static_cast<double>(v.support_bits()) <= 1.5 * static_cast<double>(v.storage_bits()));
    CHECK(meter.current() == v.total_bits());
}

TEST_CASE("buffer invert and clear") {
    WorkspaceMeter meter;
    BitBuffer buffer(meter, 70, "test/bits");
    for (int i = 0; i < 70; ++i) buffer.append(i % 3 == 0);
    buffer.invert();
    buffer.clear_bit(2);
    const RsBitVector v = RsBitVector::build(std::move(buffer), meter);
    for (std::uint64_t i = 1; i <= 70; ++i) {
        CHECK(v.access(i) == ((i - 1) % 3 != 0 && i != 2));
    }
    CHECK(v.ones() == 70 - 24 - 1);
}

TEST_CASE("select within a word") {
    CHECK(select_in_word(0b1011'0000'0000, 0) == 8);
    CHECK(select_in_word(0b1011'0000'0000, 2) == 11);
    CHECK(select_in_word(~std::uint64_t{0}, 63) == 63);
    CHECK(select_in_word(std::uint64_t{1} << 63, 0) == 63);
}

TEST_CASE("hand-counted vector 10110100") {
    WorkspaceMeter meter;
    const RsBitVector v = build_from({true, false, true, true, false, true, false, false}, meter);
    CHECK(v.landmark(0) == 0);
    CHECK(v.ones() == 4);
    CHECK(v.access(3));
    CHECK_FALSE(v.access(8));
    CHECK(v.rank(1) == 1);
    CHECK(v.rank(4) == 3);
    CHECK(v.rank(8) == 4);
    CHECK(v.select(2) == 3);
    CHECK(v.select(4) == 6);
    CHECK_THROWS_WITH_AS(v.select(5), doctest::Contains("no such one"), BoundsError);
}

TEST_CASE("complement select on 1100111") {
    WorkspaceMeter meter;
    const RsBitVector v = build_from({true, true, false, false, true, true, true}, meter);
    CHECK(v.complement_select(1) == 3);
    CHECK(v.complement_select(2) == 4);
    CHECK_THROWS_WITH_AS(v.complement_select(3), doctest::Contains("no such zero"), BoundsError);
}

TEST_CASE("all-zero and all-one vectors") {
    WorkspaceMeter meter;
    const RsBitVector zeros = build_from(std::vector<bool>(300, false), meter);
    CHECK(zeros.ones() == 0);
    CHECK(zeros.ones_directory().charged_bits() == 0);
    for (std::uint64_t j = 1; j <= 300; ++j) REQUIRE(zeros.complement_select(j) == j);
    const RsBitVector ones = build_from(std::vector<bool>(300, true), meter);
    for (std::uint64_t j = 1; j <= 300; ++j) REQUIRE(ones.select(j) == j);
}

TEST_CASE("random million-bit vector against prefix sums") {
    WorkspaceMeter meter;
    const std::vector<bool> bits = random_bits(1'000'000, 0.37, 99);
    const RsBitVector v = build_from(bits, meter);
    std::vector<std::uint64_t> prefix(bits.size() + 1, 0);
    for (std::size_t i = 0; i < bits.size(); ++i) prefix[i + 1] = prefix[i] + (bits[i] ? 1 : 0);
    CHECK(v.ones() == prefix.back());
    std::mt19937_64 rng(4);
    for (int q = 0; q < 10000; ++q) {
        const std::uint64_t i = rng() % (bits.size() + 1);
        REQUIRE(v.rank(i) == prefix[i]);
    }
}
