#include "doctest.h"

#include "rosel/errors.hpp"
#include "rosel/input.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>

using namespace rosel;

TEST_CASE("text input parses one value per line") {
    CHECK(parse_text("3\n1\n4\n") == std::vector<Value>{3, 1, 4});
    CHECK(parse_text("-7\n  12 \n\n0") == std::vector<Value>{-7, 12, 0});
}

TEST_CASE("malformed text reports the line") {
    try {
        parse_text("1\n2\nx3\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_text("99999999999999999999\n"), ParseError);
}

TEST_CASE("empty input is refused") {
    CHECK_THROWS_WITH_AS(ReadOnlyArray(parse_text("")), "empty input", ParseError);
    CHECK_THROWS_AS(ReadOnlyArray(std::vector<Value>{}), ParseError);
}

TEST_CASE("generated permutation holds 1..N") {
    std::vector<Value> v = generate(parse_generator("5:seed=7"));
    CHECK(v.size() == 5);
    std::sort(v.begin(), v.end());
    CHECK(v == std::vector<Value>{1, 2, 3, 4, 5});
}

TEST_CASE("generator distributions") {
    const auto sorted = generate(parse_generator("6:seed=1,dist=sorted"));
    CHECK(sorted == std::vector<Value>{1, 2, 3, 4, 5, 6});
    const auto reverse = generate(parse_generator("4:seed=1,dist=reverse"));
    CHECK(reverse == std::vector<Value>{4, 3, 2, 1});
    const auto few = generate(parse_generator("1000:seed=3,dist=few-distinct"));
    std::vector<Value> distinct = few;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    CHECK(distinct.size() <= 16);
    CHECK(distinct.size() > 1);
    CHECK(generate(parse_generator("100:seed=9")) == generate(parse_generator("100:seed=9")));
    CHECK(generate(parse_generator("100:seed=9")) != generate(parse_generator("100:seed=10")));
}

TEST_CASE("bad generator specs") {
    CHECK_THROWS_AS(parse_generator("abc"), ParseError);
    CHECK_THROWS_AS(parse_generator("10:seed=x"), ParseError);
    CHECK_THROWS_AS(parse_generator("10:seed=1,dist=zigzag"), ParseError);
    CHECK_THROWS_AS(parse_generator("0:seed=1"), ParseError);
}

TEST_CASE("binary files round trip") {
    const auto path = std::filesystem::temp_directory_path() / "rosel_input_roundtrip.bin";
    std::vector<Value> values(1000);
    std::mt19937_64 rng(11);
    for (auto& v : values) v = static_cast<Value>(rng());
    values[0] = -1;
    save_binary(path, values);
    CHECK(std::filesystem::file_size(path) == 8 * values.size());
    CHECK(load_binary(path) == values);

    std::ofstream(path, std::ios::binary | std::ios::app) << 'x';
    CHECK_THROWS_AS(load_binary(path), ParseError);
    std::filesystem::remove(path);
    CHECK_THROWS_AS(load_binary(path), ParseError);
}

TEST_CASE("reads and comparisons are counted") {
    const ReadOnlyArray a(std::vector<Value>{3, 1, 4});
    CHECK(a.get(2) == OrderedKey{1, 2});
    a.reset_counters();
    a.get(1);
    a.get(1);
    CHECK(a.reads() == 2);
    CHECK(a.comparisons() == 0);
    CHECK_THROWS_AS(a.get(4), BoundsError);
    CHECK_THROWS_AS(a.get(0), BoundsError);

    a.reset_counters();
    CHECK_FALSE(a.less(1, 2));
    CHECK(a.reads() == 2);
    CHECK(a.comparisons() == 1);
    CHECK(a.less(2, OrderedKey{3, 1}));
    CHECK(a.reads() == 3);
    CHECK(a.comparisons() == 2);
    CHECK(a.less(OrderedKey{3, 1}, 3));
    CHECK(a.reads() == 4);
}

TEST_CASE("equal values are ordered by index") {
    const ReadOnlyArray a(std::vector<Value>{5, 5});
    CHECK(a.less(1, 2));
    CHECK_FALSE(a.less(2, 1));
    CHECK_FALSE(a.less(1, 1));
}
