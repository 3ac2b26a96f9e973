#include "doctest.h"

#include "rosel/count_vector.hpp"
#include "rosel/selection.hpp"

#include <random>

using namespace rosel;

TEST_CASE("counts (2, 0, 3) give 1100111") {
    WorkspaceMeter meter;
    const std::vector<std::uint64_t> counts{2, 0, 3};
    const CountVector c(counts, 4, meter);
    const std::vector<bool> expected{true, true, false, false, true, true, true};
    REQUIRE(c.bits().length() == expected.size());
    for (std::uint64_t i = 1; i <= expected.size(); ++i) CHECK(c.bits().access(i) == expected[i - 1]);

    const CountVector::Location loc = c.locate(3);
    CHECK(loc.position == 5);
    CHECK(loc.bucket == 3);
    CHECK(loc.border == 4);
    CHECK(loc.offset == 1);

    const CountVector::Location first = c.locate(1);
    CHECK(first.bucket == 1);
    CHECK(first.border == 0);
    CHECK(first.offset == 1);
    CHECK(c.locate(5).offset == 3);
}

TEST_CASE("locate matches a direct bucket scan") {
    std::mt19937_64 rng(2);
    for (std::uint64_t n : {10u, 1000u, 30000u}) {
        std::vector<Value> values(n);
        for (auto& v : values) v = static_cast<Value>(rng() % 1000);
        const ReadOnlyArray a(values);
        const auto order = oracle_order(values);
        const FilterPair filters{a.get(order[n / 10]), a.get(order[n - n / 10 - 1])};
        const std::uint64_t in_filter = count_active(a, filters);
        for (std::uint64_t buckets : {std::uint64_t{1}, std::uint64_t{7}, n / 3, n}) {
            WorkspaceMeter meter;
            const CountVector c(a, filters, in_filter, buckets, meter);
            std::uint64_t j = 0;
            std::uint64_t in_bucket = 0;
            std::uint64_t last_bucket = 0;
            for (Index i = 1; i <= n; ++i) {
                if (!filters.admits(a, i)) continue;
                ++j;
                const std::uint64_t u = (i - 1) / c.width() + 1;
                in_bucket = u == last_bucket ? in_bucket + 1 : 1;
                last_bucket = u;
                const CountVector::Location loc = c.locate(j);
                REQUIRE(loc.bucket == u);
                REQUIRE(loc.offset == in_bucket);
                REQUIRE(c.bucket_first(u) <= i);
            }
        }
    }
}
