#pragma once

#include "rosel/bitvector.hpp"
#include "rosel/input.hpp"
#include "rosel/pruning.hpp"
#include "rosel/workspace.hpp"

#include <cstdint>
#include <span>

namespace rosel {

/// Unary per-bucket counts of the elements between two filters: each bucket
/// contributes one 1-bit per in-filter element, and a 0-bit separates
/// consecutive buckets. Bucket u covers input indices
/// [(u-1) * width + 1, u * width].
class CountVector {
public:
    /// Position of a filtered element in the vector and in its bucket.
    struct Location {
        std::uint64_t position = 0;  // a: position of the j-th 1-bit
        std::uint64_t bucket = 0;    // u = a - j + 1
        std::uint64_t border = 0;    // z: position of the (u-1)-th 0-bit, 0 when u == 1
        std::uint64_t offset = 0;    // g: rank of the element among the bucket's filtered elements
    };

    /// One scan of `a`; `in_filter` must equal count_active(a, filters).
    CountVector(const ReadOnlyArray& a, const FilterPair& filters, std::uint64_t in_filter, std::uint64_t buckets,
                WorkspaceMeter& meter);

    /// Direct construction from bucket counts (fixtures and tests).
    CountVector(std::span<const std::uint64_t> counts, std::uint64_t width, WorkspaceMeter& meter);

    /// Locates the j-th filtered element (1-based, left to right).
    Location locate(std::uint64_t j) const;

    std::uint64_t buckets() const noexcept { return buckets_; }
    std::uint64_t width() const noexcept { return width_; }
    std::uint64_t bucket_first(std::uint64_t u) const noexcept { return (u - 1) * width_ + 1; }
    const RsBitVector& bits() const noexcept { return bits_; }

private:
    RsBitVector bits_;
    std::uint64_t buckets_ = 0;
    std::uint64_t width_ = 1;
};

}  // namespace rosel
