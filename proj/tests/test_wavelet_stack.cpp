#include "doctest.h"

#include "rosel/errors.hpp"
#include "rosel/wavelet_stack.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

using namespace rosel;

namespace {

/// Pushes the mask that keeps exactly `keep` (input indices) among the current actives.
void push_keep(WaveletStack& stack, const std::set<std::uint64_t>& keep) {
    BitBuffer mask = stack.mask_buffer();
    for (std::uint64_t j = 1; j <= stack.active_count(); ++j) mask.append(keep.count(stack.index(j)) != 0);
    stack.push_level(std::move(mask));
}

void push_bits(WaveletStack& stack, const std::vector<bool>& bits) {
    BitBuffer mask = stack.mask_buffer();
    for (bool b : bits) mask.append(b);
    stack.push_level(std::move(mask));
}

}  // namespace

TEST_CASE("fresh stacks") {
    WorkspaceMeter meter;
    const WaveletStack stack(22, meter);
    CHECK(stack.height() == 1);
    CHECK(stack.active_count() == 22);
    for (std::uint64_t i = 1; i <= 22; ++i) {
        CHECK(stack.is_active(i));
        CHECK(stack.index(i) == i);
    }
    const WaveletStack one(1, meter);
    CHECK(one.active_count() == 1);
    CHECK_THROWS_AS(WaveletStack(0, meter), UsageError);
}

TEST_CASE("push 1010 on four elements") {
    WorkspaceMeter meter;
    WaveletStack stack(4, meter);
    push_bits(stack, {true, false, true, false});
    CHECK(stack.active_count() == 2);
    CHECK(stack.index(1) == 1);
    CHECK(stack.index(2) == 3);
    CHECK(stack.height() == 2);
    CHECK(stack.level(2).length() == 4);
    CHECK_THROWS_WITH_AS(stack.index(3), doctest::Contains("fewer active elements than"), BoundsError);
    CHECK_THROWS_AS(stack.level(1), BoundsError);
}

TEST_CASE("all-ones push is the identity") {
    WorkspaceMeter meter;
    WaveletStack stack(6, meter);
    push_bits(stack, {false, true, true, false, true, true});
    push_bits(stack, {true, true, true, true});
    CHECK(stack.active_count() == 4);
    const std::vector<std::uint64_t> expected{2, 3, 5, 6};
    for (std::uint64_t j = 1; j <= 4; ++j) CHECK(stack.index(j) == expected[j - 1]);
}

TEST_CASE("bad pushes") {
    WorkspaceMeter meter;
    WaveletStack stack(3, meter);
    CHECK_THROWS_WITH_AS(push_bits(stack, {false, false, false}), "empty level refused", UsageError);
    BitBuffer wrong(meter, 2, "wrong");
    wrong.append(true);
    wrong.append(true);
    CHECK_THROWS_AS(stack.push_level(std::move(wrong)), UsageError);
    CHECK(stack.active_count() == 3);
    CHECK_THROWS_AS(stack.is_active(0), BoundsError);
    CHECK_THROWS_AS(stack.is_active(4), BoundsError);
}

TEST_CASE("22-element replay ends with actives 5, 6 and 16") {
    WorkspaceMeter meter;
    WaveletStack stack(22, meter);
    push_keep(stack, {2, 3, 5, 6, 9, 11, 14, 16, 17, 20, 21});
    push_keep(stack, {3, 5, 6, 11, 16, 21});
    push_keep(stack, {5, 6, 16});
    CHECK(stack.height() == 4);
    CHECK(stack.active_count() == 3);
    CHECK(stack.index(1) == 5);
    CHECK(stack.index(2) == 6);
    CHECK(stack.index(3) == 16);
    for (std::uint64_t i = 1; i <= 22; ++i) {
        CHECK(stack.is_active(i) == (i == 5 || i == 6 || i == 16));
    }
}

TEST_CASE("random prune traces agree with an explicit active list") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        const std::uint64_t n = 1 + rng() % 4096;
        WorkspaceMeter meter;
        WaveletStack stack(n, meter);
        std::vector<std::uint64_t> active(n);
        for (std::uint64_t i = 0; i < n; ++i) active[i] = i + 1;
        while (active.size() > 1) {
            std::vector<bool> keep(active.size());
            std::vector<std::uint64_t> next;
            const double density = 0.3 + 0.6 * static_cast<double>(rng() % 1000) / 1000.0;
            for (std::size_t j = 0; j < active.size(); ++j) {
                keep[j] = static_cast<double>(rng() % 1000) / 1000.0 < density;
                if (keep[j]) next.push_back(active[j]);
            }
            if (next.empty()) {
                keep[0] = true;
                next.push_back(active[0]);
            }
            push_bits(stack, keep);
            active = next;
            REQUIRE(stack.active_count() == active.size());
            for (std::size_t j = 0; j < active.size(); ++j) REQUIRE(stack.index(j + 1) == active[j]);
            for (int q = 0; q < 50; ++q) {
                const std::uint64_t i = 1 + rng() % n;
                REQUIRE(stack.is_active(i) == std::binary_search(active.begin(), active.end(), i));
            }
        }
    }
}

TEST_CASE("shrink violations are counted above the floor") {
    WorkspaceMeter meter;
    WaveletStack stack(1024, meter);
    std::vector<bool> most(1024, true);
    most[0] = false;
    push_bits(stack, most);
    CHECK(stack.shrink_violations() == 1);
    std::vector<bool> half(1023, false);
    for (std::size_t j = 0; j < half.size(); j += 2) half[j] = true;
    push_bits(stack, half);
    CHECK(stack.shrink_violations() == 1);
}

TEST_CASE("stack bits are charged to the meter") {
    WorkspaceMeter meter;
    {
        WaveletStack stack(5000, meter);
        std::vector<bool> half(5000);
        for (std::size_t j = 0; j < half.size(); ++j) half[j] = j % 2 == 0;
        push_bits(stack, half);
        CHECK(meter.current() == stack.total_bits());
        CHECK(stack.total_bits() >= 5000);
    }
    CHECK(meter.current() == 0);
}
