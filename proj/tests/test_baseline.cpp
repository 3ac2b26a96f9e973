#include "doctest.h"

#include "rosel/baseline_select.hpp"
#include "rosel/selection.hpp"

#include <random>

using namespace rosel;

namespace {

PackedArray all_indices(const ReadOnlyArray& a, WorkspaceMeter& meter) {
    PackedArray p(meter, a.size(), bits_for(a.size()), "test/indices");
    for (Index i = 1; i <= a.size(); ++i) p.set(i - 1, i);
    return p;
}

std::vector<Value> random_values(std::uint64_t n, std::uint64_t seed, std::uint64_t spread) {
    std::mt19937_64 rng(seed);
    std::vector<Value> v(n);
    for (auto& x : v) x = static_cast<Value>(rng() % spread);
    return v;
}

}  // namespace

TEST_CASE("baseline on a hand-sorted array") {
    const ReadOnlyArray a(std::vector<Value>{3, 1, 4, 2, 5});
    WorkspaceMeter meter;
    PackedArray idx = all_indices(a, meter);
    CHECK(baseline_select(idx, 2, a, meter) == 4);
    PackedArray again = all_indices(a, meter);
    CHECK(baseline_select(again, 1, a, meter) == 2);
}

TEST_CASE("baseline agrees with the oracle for every rank") {
    for (std::uint64_t n : {1u, 2u, 7u, 64u, 333u, 1024u}) {
        for (std::uint64_t spread : {3u, 1000000u}) {
            const auto values = random_values(n, n + spread, spread);
            const ReadOnlyArray a(values);
            const auto order = oracle_order(values);
            for (std::uint64_t k = 1; k <= n; ++k) {
                WorkspaceMeter meter;
                PackedArray idx = all_indices(a, meter);
                REQUIRE(baseline_select(idx, k, a, meter) == order[k - 1]);
            }
        }
    }
}

TEST_CASE("baseline is linear in comparisons") {
    const auto values = random_values(1 << 16, 5, 1u << 30);
    const ReadOnlyArray a(values);
    WorkspaceMeter meter;
    PackedArray idx = all_indices(a, meter);
    a.reset_counters();
    baseline_select(idx, 1 << 15, a, meter);
    CHECK(a.comparisons() <= 40u * (1u << 16));
}

TEST_CASE("partition around the selected element") {
    const auto values = random_values(500, 8, 50);
    const ReadOnlyArray a(values);
    WorkspaceMeter meter;
    PackedArray idx = all_indices(a, meter);
    const std::uint64_t at = baseline_select_at(idx, 100, 400, 120, a, meter);
    CHECK(at == 100 + 119);
    const Index pivot = idx.get(at);
    for (std::uint64_t p = 100; p < at; ++p) CHECK(a.less(idx.get(p), pivot));
    for (std::uint64_t p = at + 1; p < 400; ++p) CHECK(a.less(pivot, idx.get(p)));
}

TEST_CASE("heap sort and multiselect") {
    const auto values = random_values(777, 9, 100);
    const ReadOnlyArray a(values);
    const auto order = oracle_order(values);
    WorkspaceMeter meter;
    PackedArray idx = all_indices(a, meter);
    heap_sort(idx, 0, 777, a);
    for (std::uint64_t p = 0; p < 777; ++p) REQUIRE(idx.get(p) == order[p]);

    PackedArray multi = all_indices(a, meter);
    const std::vector<std::uint64_t> ranks{1, 50, 51, 400, 777};
    baseline_multiselect(multi, 0, 777, 0, ranks.size(), [&](std::uint64_t j) { return ranks[j]; }, 0, a, meter);
    for (std::uint64_t r : ranks) CHECK(multi.get(r - 1) == order[r - 1]);
}
