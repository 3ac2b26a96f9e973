#pragma once

#include <compare>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace rosel {

using Value = std::int64_t;
/// 1-based position in the input array.
using Index = std::uint64_t;

/// An element together with its position. Ordering is lexicographic on
/// (value, index), so distinct positions never compare equal.
struct OrderedKey {
    Value value = 0;
    Index index = 0;

    friend constexpr auto operator<=>(const OrderedKey&, const OrderedKey&) = default;
};

/// Immutable input sequence x_1..x_N with per-run access and comparison counters.
/// Counters are plain integers: one selection run per array at a time.
class ReadOnlyArray {
public:
    /// Throws ParseError("empty input") when `values` is empty.
    explicit ReadOnlyArray(std::vector<Value> values);

    std::uint64_t size() const noexcept { return values_.size(); }

    /// One read. Throws BoundsError outside [1, N].
    OrderedKey get(Index i) const;

    /// Tie-broken x_i < x_j. Two reads, one comparison.
    bool less(Index i, Index j) const;

    /// Tie-broken x_i < key. One read, one comparison.
    bool less(Index i, const OrderedKey& key) const;

    /// Tie-broken key < x_i. One read, one comparison.
    bool less(const OrderedKey& key, Index i) const;

    std::uint64_t reads() const noexcept { return reads_; }
    std::uint64_t comparisons() const noexcept { return comparisons_; }
    void reset_counters() const noexcept {
        reads_ = 0;
        comparisons_ = 0;
    }

    /// Uncounted view for oracles and I/O; algorithms must not use it.
    std::span<const Value> raw() const noexcept { return values_; }

private:
    OrderedKey fetch(Index i) const {
        check(i);
        ++reads_;
        return OrderedKey{values_[i - 1], i};
    }
    void check(Index i) const;

    std::vector<Value> values_;
    mutable std::uint64_t reads_ = 0;
    mutable std::uint64_t comparisons_ = 0;
};

enum class Distribution { Permutation, Sorted, ReverseSorted, FewDistinct };

struct GeneratorSpec {
    std::uint64_t count = 0;
    std::uint64_t seed = 0;
    Distribution distribution = Distribution::Permutation;
};

/// Parses "N:seed=X[,dist=D]" with D in {perm, sorted, reverse, few-distinct}.
GeneratorSpec parse_generator(const std::string& spec);
std::string to_string(Distribution d);

/// Permutation and sorted variants produce values 1..N; few-distinct draws from 16 values.
std::vector<Value> generate(const GeneratorSpec& spec);

/// Newline-separated decimal integers; blank lines are skipped. Errors carry the 1-based line number.
std::vector<Value> parse_text(const std::string& text);
std::vector<Value> load_text(const std::filesystem::path& path);

/// Consecutive little-endian 64-bit two's-complement integers, no header.
std::vector<Value> load_binary(const std::filesystem::path& path);
void save_binary(const std::filesystem::path& path, std::span<const Value> values);

}  // namespace rosel
